#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "stratcat/stratify.hpp"
#include "stratcat/sweep.hpp"

namespace stratcat::cli {

struct RunConfig {
  std::string command; // stratify | spe-verify | yoneda | internal-full | smallmaps-audit
  std::string formula;
  std::string corpus_path;
  strat::PairingConvention conv = strat::PairingConvention::Quine;
  unsigned rank = 2;
  std::uint64_t seed = 1;
  bool json = false;
  sweep::Exec exec = sweep::Exec::Parallel;
  std::string predicate = "all";           // smallmaps-audit
  std::string category_path;               // yoneda
  std::string diagram_path;                // yoneda
  std::string object_text;                 // yoneda
};

struct Report {
  nlohmann::json json;   // stable: byte-identical for identical config+seed
  std::string text;      // human-readable; may mention elapsed time
  int exit_code = 0;     // 0 all-pass, 1 any FAIL verdict, 2 config/parse error
};

/// Dispatches a command and assembles its report. Never throws; errors
/// become exit code 2 with the message in both renderings.
Report run(const RunConfig& config);

} // namespace stratcat::cli

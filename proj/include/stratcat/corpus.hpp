#pragma once

#include <string>
#include <vector>

#include "stratcat/stratify.hpp"

namespace stratcat::corpus {

// Corpus files are UTF-8 text with one entry per line:
//   <formula> TAB <STRAT|UNSTRAT>
// Lines starting with '#' and blank lines are ignored.

struct Entry {
  int line = 0;
  std::string formula;
  bool expect_strat = false;
};

struct LineError {
  int line = 0;
  std::string message;
};

struct ParsedCorpus {
  std::vector<Entry> entries;
  std::vector<LineError> errors;
};

ParsedCorpus parse_corpus(const std::string& text);

struct ItemResult {
  int line = 0;
  std::string formula;
  bool expected_strat = false;
  bool actual_strat = false;
  bool match = false;
};

struct RunResult {
  std::vector<ItemResult> items;
  std::vector<LineError> errors; // malformed lines and per-line parse errors
  std::size_t matches = 0;
  bool clean() const { return errors.empty() && matches == items.size(); }
};

/// Checks every entry under the given convention; malformed lines are
/// reported and skipped, the run continues.
RunResult run_corpus(const std::string& text, strat::PairingConvention conv);

} // namespace stratcat::corpus

#include "stratcat/corpus.hpp"

#include <sstream>

namespace stratcat::corpus {

ParsedCorpus parse_corpus(const std::string& text) {
  ParsedCorpus out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      out.errors.push_back({lineno, "missing TAB separator"});
      continue;
    }
    std::string formula = line.substr(0, tab);
    std::string expect = line.substr(tab + 1);
    while (!expect.empty() && (expect.back() == ' ' || expect.back() == '\t')) expect.pop_back();
    std::size_t lead = expect.find_first_not_of(" \t");
    expect = lead == std::string::npos ? std::string{} : expect.substr(lead);
    if (expect == "STRAT") {
      out.entries.push_back({lineno, std::move(formula), true});
    } else if (expect == "UNSTRAT") {
      out.entries.push_back({lineno, std::move(formula), false});
    } else {
      out.errors.push_back({lineno, "expected STRAT or UNSTRAT, got '" + expect + "'"});
    }
  }
  return out;
}

RunResult run_corpus(const std::string& text, strat::PairingConvention conv) {
  RunResult out;
  ParsedCorpus parsed = parse_corpus(text);
  out.errors = std::move(parsed.errors);
  for (const auto& entry : parsed.entries) {
    ItemResult item;
    item.line = entry.line;
    item.formula = entry.formula;
    item.expected_strat = entry.expect_strat;
    try {
      item.actual_strat = strat::is_stratified(logic::parse(entry.formula), conv);
    } catch (const logic::ParseError& e) {
      out.errors.push_back({entry.line, e.what()});
      continue;
    }
    item.match = item.actual_strat == item.expected_strat;
    if (item.match) ++out.matches;
    out.items.push_back(std::move(item));
  }
  return out;
}

} // namespace stratcat::corpus

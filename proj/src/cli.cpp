#include "stratcat/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <variant>

#include "stratcat/corpus.hpp"
#include "stratcat/internal_cat.hpp"
#include "stratcat/smallmaps.hpp"
#include "stratcat/spe.hpp"

namespace stratcat::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json base_config(const RunConfig& c) {
  json out;
  out["seed"] = c.seed;
  out["exec"] = sweep::to_string(c.exec);
  return out;
}

json mor_json(const cat::SetMor& f) {
  json pairs = json::array();
  for (const auto& [x, y] : f.pairs()) pairs.push_back({x.to_string(), y.to_string()});
  return json{{"dom", f.dom().to_string()}, {"cod", f.cod().to_string()}, {"graph", pairs}};
}

Report stratify_formula(const RunConfig& config) {
  Report rep;
  rep.json["command"] = "stratify";
  json cfg = base_config(config);
  cfg["conv"] = strat::to_string(config.conv);
  cfg["formula"] = config.formula;
  rep.json["config"] = cfg;

  logic::FormulaPtr f;
  try {
    f = logic::parse(config.formula);
  } catch (const logic::ParseError& e) {
    rep.exit_code = 2;
    rep.json["error"] = e.what();
    rep.text = std::string(e.what()) + "\n";
    return rep;
  }
  auto graph = strat::collect_constraints(f, config.conv);
  auto solved = strat::solve(graph);
  std::ostringstream text;
  if (auto* strata = std::get_if<strat::Stratification>(&solved)) {
    rep.json["verdict"] = "STRAT";
    json levels;
    for (const auto& [name, level] : strat::variable_levels(graph, *strata)) levels[name] = level;
    rep.json["levels"] = levels;
    text << "STRAT " << logic::render(f) << "\n";
    for (const auto& [name, level] : strat::variable_levels(graph, *strata))
      text << "  sigma(" << name << ") = " << level << "\n";
    rep.exit_code = 0;
  } else {
    const auto& w = std::get<strat::FailureWitness>(solved);
    rep.json["verdict"] = "UNSTRAT";
    rep.json["weight"] = w.weight;
    json cycle = json::array();
    for (const auto& c : w.cycle)
      cycle.push_back({{"from", c.from},
                       {"to", c.to},
                       {"offset", c.offset},
                       {"origin", c.origin},
                       {"line", c.span.line},
                       {"col", c.span.col}});
    rep.json["cycle"] = cycle;
    text << "UNSTRAT " << logic::render(f) << "\n" << strat::explain(w);
    rep.exit_code = 1;
  }
  rep.text = text.str();
  return rep;
}

Report stratify_corpus(const RunConfig& config) {
  Report rep;
  rep.json["command"] = "stratify";
  json cfg = base_config(config);
  cfg["conv"] = strat::to_string(config.conv);
  cfg["corpus"] = config.corpus_path;
  rep.json["config"] = cfg;

  std::string text;
  try {
    text = read_file(config.corpus_path);
  } catch (const std::exception& e) {
    rep.exit_code = 2;
    rep.json["error"] = e.what();
    rep.text = std::string(e.what()) + "\n";
    return rep;
  }
  auto result = corpus::run_corpus(text, config.conv);
  json items = json::array();
  std::ostringstream out;
  for (const auto& item : result.items) {
    items.push_back({{"line", item.line},
                     {"formula", item.formula},
                     {"expected", item.expected_strat ? "STRAT" : "UNSTRAT"},
                     {"actual", item.actual_strat ? "STRAT" : "UNSTRAT"},
                     {"match", item.match}});
    if (!item.match)
      out << "line " << item.line << ": expected " << (item.expected_strat ? "STRAT" : "UNSTRAT")
          << ", got " << (item.actual_strat ? "STRAT" : "UNSTRAT") << ": " << item.formula << "\n";
  }
  json errors = json::array();
  for (const auto& err : result.errors) {
    errors.push_back({{"line", err.line}, {"message", err.message}});
    out << "line " << err.line << ": error: " << err.message << "\n";
  }
  rep.json["results"] = items;
  rep.json["errors"] = errors;
  rep.json["summary"] = {{"entries", result.items.size()},
                         {"matches", result.matches},
                         {"mismatches", result.items.size() - result.matches},
                         {"errors", result.errors.size()}};
  out << result.matches << "/" << result.items.size() << " expectations matched, "
      << result.errors.size() << " malformed line(s)\n";
  rep.text = out.str();
  rep.exit_code = result.clean() ? 0 : 1;
  return rep;
}

Report run_spe(const RunConfig& config) {
  Report rep;
  rep.json["command"] = "spe-verify";
  json cfg = base_config(config);
  cfg["rank"] = config.rank;
  rep.json["config"] = cfg;

  auto report = spe::verify_spe(config.rank, config.seed, config.exec);
  json items = json::array();
  std::ostringstream out;
  std::size_t pass = 0, fail = 0, unchecked = 0;
  for (const auto& item : report.items) {
    json witness = json::object();
    if (!item.witnesses.empty()) witness["details"] = item.witnesses;
    items.push_back({{"axiom", item.axiom},
                     {"status", item.status},
                     {"witness", witness},
                     {"note", item.note}});
    out << "[" << item.status << "] " << item.axiom;
    if (!item.witnesses.empty()) out << "  " << item.witnesses.front();
    out << "\n";
    if (item.status == "PASS") ++pass;
    else if (item.status == "FAIL") ++fail;
    else ++unchecked;
  }
  rep.json["results"] = items;
  rep.json["summary"] = {{"pass", pass}, {"fail", fail}, {"unchecked", unchecked}};
  out << pass << " pass, " << fail << " fail, " << unchecked << " unchecked\n";
  rep.text = out.str();
  rep.exit_code = report.all_pass() ? 0 : 1;
  return rep;
}

Report run_yoneda(const RunConfig& config) {
  Report rep;
  rep.json["command"] = "yoneda";
  json cfg = base_config(config);
  cfg["cat"] = config.category_path;
  cfg["diagram"] = config.diagram_path;
  cfg["object"] = config.object_text;
  rep.json["config"] = cfg;

  try {
    auto c = icat::category_from_json(read_file(config.category_path));
    auto d = icat::diagram_from_json(c, read_file(config.diagram_path));
    auto u = hf::HfSet::parse(config.object_text);
    auto res = icat::yoneda_check(c, u, d);

    json bij = json::array();
    for (const auto& [eta, value] : res.bijection) {
      json table = json::array();
      for (const auto& [arg, out_val] : eta.pairs())
        table.push_back({arg.to_string(), out_val.to_string()});
      bij.push_back({{"transformation", table}, {"value", value.to_string()}});
    }
    rep.json["results"] = {{"verdict", res.pass ? "PASS" : "FAIL"},
                           {"object", u.to_string()},
                           {"nat_count", res.nat_count},
                           {"fibre", res.fu.to_string()},
                           {"pullback_carrier", res.pullback_carrier.to_string()},
                           {"bijection", bij},
                           {"failures", res.failures}};
    std::ostringstream out;
    out << (res.pass ? "PASS" : "FAIL") << " yoneda at " << u.to_string() << ": |Nat| = "
        << res.nat_count << ", |F(U)| = " << res.fu.card() << "\n";
    for (const auto& failmsg : res.failures) out << "  " << failmsg << "\n";
    rep.text = out.str();
    rep.exit_code = res.pass ? 0 : 1;
  } catch (const std::exception& e) {
    rep.exit_code = 2;
    rep.json["error"] = e.what();
    rep.text = std::string(e.what()) + "\n";
  }
  return rep;
}

Report run_internal_full(const RunConfig& config) {
  Report rep;
  rep.json["command"] = "internal-full";
  json cfg = base_config(config);
  cfg["rank"] = config.rank;
  rep.json["config"] = cfg;

  try {
    auto fam = icat::generic_family(config.rank);
    json items = json::array();
    for (const auto& entry : fam.fullness)
      items.push_back({{"dom", entry.a.to_string()},
                       {"cod", entry.b.to_string()},
                       {"fibre", entry.fibre_size},
                       {"hom", entry.hom_size},
                       {"match", entry.match}});
    // the generic morphism acts as ⟨f,{x}⟩ ↦ ⟨f,{f(x)}⟩, rechecked here
    bool ev_ok = true;
    for (const auto& p : fam.dom_star.total.elems()) {
      auto [f, sx] = hf::kpair_decode(p);
      auto [f2, sy] = hf::kpair_decode(fam.ev_gen.apply(p));
      hf::HfSet graph = hf::kpair_decode(f).first;
      if (!(f2 == f) || !(sy == hf::singleton(cat::apply_graph(graph, sx.elems()[0]))))
        ev_ok = false;
    }
    rep.json["results"] = items;
    rep.json["summary"] = {{"objects", fam.v_set.card()},
                           {"functions", fam.funct.card()},
                           {"full", fam.full()},
                           {"ev_pointwise", ev_ok}};
    std::ostringstream out;
    out << (fam.full() && ev_ok ? "PASS" : "FAIL") << " internal full subcategory at rank "
        << config.rank << ": " << fam.v_set.card() << " objects, " << fam.funct.card()
        << " functions\n";
    rep.text = out.str();
    rep.exit_code = fam.full() && ev_ok ? 0 : 1;
  } catch (const std::exception& e) {
    rep.exit_code = 2;
    rep.json["error"] = e.what();
    rep.text = std::string(e.what()) + "\n";
  }
  return rep;
}

Report run_smallmaps(const RunConfig& config) {
  Report rep;
  rep.json["command"] = "smallmaps-audit";
  json cfg = base_config(config);
  cfg["pred"] = config.predicate;
  cfg["rank"] = config.rank;
  rep.json["config"] = cfg;

  small::SmallnessPredicate pred;
  try {
    pred = small::SmallnessPredicate::from_name(config.predicate);
    if (config.rank > 3) throw std::invalid_argument("sample rank above 3 is not enumerable");
  } catch (const std::exception& e) {
    rep.exit_code = 2;
    rep.json["error"] = e.what();
    rep.text = std::string(e.what()) + "\n";
    return rep;
  }
  auto report = small::audit_small_maps(pred, config.rank, config.exec, config.seed);
  json items = json::array();
  std::ostringstream out;
  for (const auto& entry : report.entries) {
    json witness = json::object();
    if (!entry.witness.empty()) {
      witness["description"] = entry.witness;
      json maps = json::array();
      for (const auto& m : entry.witness_maps) maps.push_back(mor_json(m));
      witness["maps"] = maps;
    }
    items.push_back({{"axiom", entry.axiom},
                     {"title", entry.title},
                     {"status", entry.status},
                     {"witness", witness}});
    out << "[" << entry.status << "] " << entry.axiom << " " << entry.title;
    if (!entry.witness.empty()) out << "\n    " << entry.witness;
    out << "\n";
  }
  rep.json["results"] = items;
  rep.json["summary"] = {{"all_pass", report.all_pass()}, {"sampled", report.sampled}};
  rep.text = out.str();
  rep.exit_code = report.all_pass() ? 0 : 1;
  return rep;
}

} // namespace

Report run(const RunConfig& config) {
  auto started = std::chrono::steady_clock::now();
  Report rep;
  if (config.command == "stratify") {
    rep = config.corpus_path.empty() ? stratify_formula(config) : stratify_corpus(config);
  } else if (config.command == "spe-verify") {
    rep = run_spe(config);
  } else if (config.command == "yoneda") {
    rep = run_yoneda(config);
  } else if (config.command == "internal-full") {
    rep = run_internal_full(config);
  } else if (config.command == "smallmaps-audit") {
    rep = run_smallmaps(config);
  } else {
    rep.exit_code = 2;
    rep.json["error"] = "unknown command: " + config.command;
    rep.text = "unknown command: " + config.command + "\n";
    return rep;
  }
  auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  // elapsed time stays out of the JSON rendering so reports are
  // byte-identical for identical (config, seed)
  std::ostringstream tail;
  tail << "elapsed " << static_cast<long long>(elapsed.count()) << " ms\n";
  rep.text += tail.str();
  return rep;
}

} // namespace stratcat::cli

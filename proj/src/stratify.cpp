#include "stratcat/stratify.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace stratcat::strat {

PairingConvention convention_from_name(std::string_view name) {
  if (name == "quine") return PairingConvention::Quine;
  if (name == "wk") return PairingConvention::WK;
  throw std::invalid_argument("unknown pairing convention: " + std::string(name));
}

std::string to_string(PairingConvention c) {
  return c == PairingConvention::Quine ? "quine" : "wk";
}

namespace {

std::string sketch(const std::string& rendered) {
  if (rendered.size() <= 48) return rendered;
  return rendered.substr(0, 45) + "...";
}

struct Collector {
  PairingConvention conv;
  ConstraintGraph g;
  std::map<std::string, int> free_nodes;              // free variable name → node
  std::vector<std::pair<std::string, int>> scope;     // binder stack: name → node
  std::map<std::string, int> name_uses;               // for display disambiguation

  int fresh_node(std::string origin, bool is_var, logic::Span span) {
    int id = static_cast<int>(g.nodes.size());
    g.nodes.push_back({id, std::move(origin), is_var, span});
    return id;
  }

  int var_node(const std::string& name, logic::Span span) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    auto it = free_nodes.find(name);
    if (it != free_nodes.end()) return it->second;
    int id = fresh_node(name, true, span);
    name_uses[name] = 1;
    free_nodes[name] = id;
    return id;
  }

  int binder_node(const std::string& name, logic::Span span) {
    int& uses = name_uses[name];
    std::string display = uses == 0 ? name : name + "#" + std::to_string(uses);
    ++uses;
    return fresh_node(display, true, span);
  }

  void edge(int from, int to, int offset, std::string origin, logic::Span span) {
    g.edges.push_back({from, to, offset, sketch(std::move(origin)), span});
  }

  int term(const logic::Term& t) {
    using K = logic::Term::Kind;
    switch (t.kind) {
      case K::Var:
        return var_node(t.name, t.span);
      case K::Abst: {
        scope.emplace_back(t.name, binder_node(t.name, t.span));
        int bound = scope.back().second;
        std::string shown = render(logic::t_abst(t.name, t.body, t.span));
        int node = fresh_node(sketch(shown), false, t.span);
        edge(bound, node, +1, shown, t.span);
        formula(*t.body);
        scope.pop_back();
        return node;
      }
      case K::Enum: {
        std::string shown = "{...}";
        {
          std::vector<logic::TermPtr> copy(t.elems);
          shown = render(logic::t_enum(std::move(copy), t.span));
        }
        int node = fresh_node(sketch(shown), false, t.span);
        std::vector<int> members;
        members.reserve(t.elems.size());
        for (const auto& e : t.elems) members.push_back(term(*e));
        for (std::size_t i = 1; i < members.size(); ++i)
          edge(members[i], members[0], 0, shown, t.span);
        if (!members.empty()) edge(members[0], node, +1, shown, t.span);
        return node;
      }
      case K::Pair: {
        std::string shown = render(logic::t_pair(t.a, t.b, t.span));
        int node = fresh_node(sketch(shown), false, t.span);
        int left = term(*t.a);
        int right = term(*t.b);
        edge(left, right, 0, shown, t.span);
        edge(left, node, conv == PairingConvention::Quine ? 0 : +2, shown, t.span);
        return node;
      }
      case K::Union: {
        std::string shown = render(logic::t_union(t.a, t.span));
        int node = fresh_node(sketch(shown), false, t.span);
        edge(term(*t.a), node, -1, shown, t.span);
        return node;
      }
      case K::Pow: {
        std::string shown = render(logic::t_pow(t.a, t.span));
        int node = fresh_node(sketch(shown), false, t.span);
        edge(term(*t.a), node, +1, shown, t.span);
        return node;
      }
      case K::App: {
        std::string shown = render(logic::t_app(t.a, t.b, t.span));
        int node = fresh_node(sketch(shown), false, t.span);
        int fun = term(*t.a);
        int arg = term(*t.b);
        edge(arg, node, 0, shown, t.span);
        // the graph of f contains ⟨x, f(x)⟩; membership adds one level on
        // top of the pair, which is type-level (Quine) or two up (WK)
        edge(arg, fun, conv == PairingConvention::Quine ? +1 : +3, shown, t.span);
        return node;
      }
    }
    throw std::logic_error("unreachable");
  }

  void formula(const logic::Formula& f) {
    using K = logic::Formula::Kind;
    switch (f.kind) {
      case K::Eq: {
        int l = term(*f.lhs);
        int r = term(*f.rhs);
        edge(l, r, 0, render(f.lhs) + " = " + render(f.rhs), f.span);
        return;
      }
      case K::Mem: {
        int l = term(*f.lhs);
        int r = term(*f.rhs);
        edge(l, r, +1, render(f.lhs) + " in " + render(f.rhs), f.span);
        return;
      }
      case K::Not:
        formula(*f.f);
        return;
      case K::And:
      case K::Or:
      case K::Implies:
      case K::Iff:
        formula(*f.f);
        formula(*f.g);
        return;
      case K::Forall:
      case K::Exists:
        scope.emplace_back(f.var, binder_node(f.var, f.span));
        formula(*f.f);
        scope.pop_back();
        return;
    }
  }
};

} // namespace

ConstraintGraph collect_constraints(const logic::FormulaPtr& f, PairingConvention conv) {
  Collector c;
  c.conv = conv;
  c.formula(*f);
  return std::move(c.g);
}

bool satisfies(const ConstraintGraph& g, const std::vector<int>& levels) {
  if (levels.size() != g.nodes.size()) return false;
  for (const auto& e : g.edges)
    if (levels[e.to] - levels[e.from] != e.offset) return false;
  return true;
}

namespace {

struct Adjacency {
  // (edge index, forward?) per node
  std::vector<std::vector<std::pair<int, bool>>> out;

  explicit Adjacency(const ConstraintGraph& g) : out(g.nodes.size()) {
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const auto& e = g.edges[i];
      out[e.from].emplace_back(static_cast<int>(i), true);
      if (e.to != e.from) out[e.to].emplace_back(static_cast<int>(i), false);
    }
  }
};

Constraint oriented(const Constraint& e, bool forward) {
  if (forward) return e;
  return {e.to, e.from, -e.offset, e.origin, e.span};
}

} // namespace

SolveResult solve(const ConstraintGraph& g) {
  const std::size_t n = g.nodes.size();
  Adjacency adj(g);
  std::vector<int> level(n, 0);
  std::vector<bool> assigned(n, false);
  std::vector<int> component(n, -1);

  int comp = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (assigned[start]) continue;
    level[start] = 0;
    assigned[start] = true;
    component[start] = comp;
    std::deque<int> queue{static_cast<int>(start)};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [ei, fwd] : adj.out[u]) {
        Constraint e = oriented(g.edges[ei], fwd); // e.from == u
        if (!assigned[e.to]) {
          level[e.to] = level[e.from] + e.offset;
          assigned[e.to] = true;
          component[e.to] = comp;
          queue.push_back(e.to);
        }
      }
    }
    ++comp;
  }

  std::vector<int> bad;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (level[e.to] - level[e.from] != e.offset) bad.push_back(static_cast<int>(i));
  }

  if (bad.empty()) {
    std::vector<int> min_level(static_cast<std::size_t>(comp), std::numeric_limits<int>::max());
    for (std::size_t i = 0; i < n; ++i)
      min_level[component[i]] = std::min(min_level[component[i]], level[i]);
    for (std::size_t i = 0; i < n; ++i) level[i] -= min_level[component[i]];
    return Stratification{std::move(level)};
  }

  // Witness: for each disagreeing edge u→v, find the shortest path v⇝u
  // through agreeing edges; the path plus the edge is a closed cycle with
  // nonzero offset sum. Keep the shortest such cycle.
  std::vector<bool> is_bad(g.edges.size(), false);
  for (int b : bad) is_bad[b] = true;

  std::optional<FailureWitness> best;
  for (int b : bad) {
    const Constraint& e = g.edges[b];
    // BFS from e.to back to e.from over good edges
    std::vector<std::pair<int, bool>> via(n, {-1, true});
    std::vector<bool> seen(n, false);
    std::deque<int> queue{e.to};
    seen[e.to] = true;
    while (!queue.empty() && !seen[e.from]) {
      int u = queue.front();
      queue.pop_front();
      for (auto [ei, fwd] : adj.out[u]) {
        if (is_bad[ei]) continue;
        Constraint step = oriented(g.edges[ei], fwd);
        if (seen[step.to]) continue;
        seen[step.to] = true;
        via[step.to] = {ei, fwd};
        queue.push_back(step.to);
      }
    }
    std::vector<Constraint> cycle;
    if (e.to == e.from) {
      cycle = {e}; // self-loop
    } else {
      if (!seen[e.from]) continue; // cannot happen: the BFS tree connects the component
      std::vector<Constraint> path;
      for (int at = e.from; at != e.to;) {
        auto [ei, fwd] = via[at];
        Constraint step = oriented(g.edges[ei], fwd);
        path.push_back(step);
        at = step.from;
      }
      std::reverse(path.begin(), path.end());
      cycle = std::move(path);
      cycle.push_back(e);
    }
    int weight = 0;
    for (const auto& c : cycle) weight += c.offset;
    if (!best || cycle.size() < best->cycle.size())
      best = FailureWitness{std::move(cycle), weight};
  }
  return *best;
}

bool is_stratified(const logic::FormulaPtr& f, PairingConvention conv) {
  return std::holds_alternative<Stratification>(solve(collect_constraints(f, conv)));
}

std::map<std::string, int> variable_levels(const ConstraintGraph& g, const Stratification& s) {
  std::map<std::string, int> out;
  for (const auto& node : g.nodes)
    if (node.is_var) out[node.origin] = s.levels[node.id];
  return out;
}

ComprehensionResult check_comprehension(const logic::FormulaPtr& phi, const std::string& z,
                                        PairingConvention conv) {
  ComprehensionResult res;
  auto fv = logic::free_vars(phi);
  res.degenerate = fv.count(z) == 0;

  std::string y = "y";
  for (int k = 0; fv.count(y) || y == z; ++k) y = "y" + std::to_string(k);
  res.set_variable = y;

  logic::FormulaPtr body =
      logic::f_iff(logic::f_mem(logic::t_var(z), logic::t_var(y)), phi);
  logic::FormulaPtr instance = logic::f_forall(z, body);
  instance = logic::f_exists(y, instance);
  fv.erase(z);
  for (auto it = fv.rbegin(); it != fv.rend(); ++it)
    instance = logic::f_forall(*it, instance);
  res.instance = instance;

  res.graph = collect_constraints(instance, conv);
  SolveResult r = solve(res.graph);
  if (auto* strat = std::get_if<Stratification>(&r)) {
    res.accepted = true;
    res.stratification = std::move(*strat);
  } else {
    res.accepted = false;
    res.witness = std::move(std::get<FailureWitness>(r));
  }
  return res;
}

std::string explain(const FailureWitness& w) {
  std::ostringstream out;
  out << "no stratification exists: the following constraints form a closed cycle\n";
  for (const auto& c : w.cycle) {
    out << "  level(n" << c.to << ") - level(n" << c.from << ") = " << (c.offset >= 0 ? "+" : "")
        << c.offset << "   from `" << c.origin << "`";
    if (c.span.line > 0) out << " at " << c.span.line << ":" << c.span.col;
    out << "\n";
  }
  out << "cycle weight " << (w.weight >= 0 ? "+" : "") << w.weight << " != 0\n";
  return out.str();
}

} // namespace stratcat::strat

#include "latlab/fol/eval.hpp"

#include <algorithm>

namespace latlab::fol {

namespace {

// Environment as a small stack of bindings; scopes are shallow, linear scan
// beats hashing here.
struct Env {
  std::vector<std::pair<std::string, std::size_t>> binds;

  const std::size_t* find(const std::string& v) const {
    for (auto it = binds.rbegin(); it != binds.rend(); ++it)
      if (it->first == v) return &it->second;
    return nullptr;
  }
};

struct Evaluator {
  const FiniteStructure& s;
  Env env;
  FiniteStructure::Tuple scratch;

  std::size_t lookup(const std::string& v) {
    const std::size_t* x = env.find(v);
    if (!x) throw EvalError("unbound free variable: " + v);
    return *x;
  }

  bool eval(const Formula& f) {
    switch (f.kind) {
      case Kind::Eq:
        return lookup(f.vars[0]) == lookup(f.vars[1]);
      case Kind::Rel: {
        const auto& rel = s.has_relation(f.name)
                              ? s.relation(f.name)
                              : throw EvalError("unknown relation: " + f.name);
        if (rel.arity != f.vars.size())
          throw EvalError("arity mismatch for relation '" + f.name + "'");
        scratch.clear();
        for (const auto& v : f.vars) scratch.push_back(lookup(v));
        return rel.contains(scratch);
      }
      case Kind::Not:
        return !eval(f.children[0]);
      case Kind::And:
        return eval(f.children[0]) && eval(f.children[1]);
      case Kind::Or:
        return eval(f.children[0]) || eval(f.children[1]);
      case Kind::Implies:
        return !eval(f.children[0]) || eval(f.children[1]);
      case Kind::Exists:
      case Kind::Forall: {
        bool want = f.kind == Kind::Exists;
        env.binds.emplace_back(f.name, 0);
        for (std::size_t i = 0; i < s.size(); ++i) {
          env.binds.back().second = i;
          if (eval(f.children[0]) == want) {
            env.binds.pop_back();
            return want;
          }
        }
        env.binds.pop_back();
        return !want;
      }
    }
    return false;
  }
};

}  // namespace

bool evaluate_indices(const FiniteStructure& s, const Formula& f,
                      const std::map<std::string, std::size_t>& assignment) {
  Evaluator ev{s, {}, {}};
  for (const auto& [v, x] : assignment) {
    if (x >= s.size()) throw EvalError("assignment index out of universe");
    ev.env.binds.emplace_back(v, x);
  }
  for (const auto& v : free_variables(f))
    if (!ev.env.find(v)) throw EvalError("unbound free variable: " + v);
  return ev.eval(f);
}

bool evaluate(const FiniteStructure& s, const Formula& f,
              const std::map<std::string, std::string>& assignment) {
  std::map<std::string, std::size_t> idx;
  for (const auto& [v, id] : assignment) idx[v] = s.index_of(id);
  return evaluate_indices(s, f, idx);
}

std::set<std::vector<std::size_t>> define_set_indices(const FiniteStructure& s,
                                                      const Formula& f,
                                                      const std::vector<std::string>& vars) {
  auto fv = free_variables(f);
  if (std::set<std::string>(fv.begin(), fv.end()) !=
      std::set<std::string>(vars.begin(), vars.end()))
    throw EvalError("define_set: vars must be exactly the free variables of the formula");

  std::set<std::vector<std::size_t>> out;
  Evaluator ev{s, {}, {}};
  for (const auto& v : vars) ev.env.binds.emplace_back(v, 0);

  std::vector<std::size_t> tuple(vars.size(), 0);
  // odometer over universe^k; k = 0 handles the sentence convention
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) ev.env.binds[i].second = tuple[i];
    if (ev.eval(f)) out.insert(tuple);
    std::size_t pos = vars.size();
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < s.size()) break;
      tuple[pos] = 0;
      if (pos == 0) return out;
    }
    if (vars.empty()) return out;
  }
}

std::set<std::vector<std::string>> define_set(const FiniteStructure& s, const Formula& f,
                                              const std::vector<std::string>& vars) {
  std::set<std::vector<std::string>> out;
  for (const auto& t : define_set_indices(s, f, vars)) {
    std::vector<std::string> row;
    row.reserve(t.size());
    for (auto x : t) row.push_back(s.id_of(x));
    out.insert(row);
  }
  return out;
}

}  // namespace latlab::fol

#include "latlab/fol/interpretation.hpp"

#include <algorithm>
#include <sstream>

#include "latlab/rng.hpp"

namespace latlab::fol {

Interpretation Interpretation::identity(const std::map<std::string, std::size_t>& rel_arities) {
  Interpretation I;
  I.dim = 1;
  I.delta_params = {"u"};
  I.delta = Formula::eq("u", "u");
  I.epsilon_params = {"u", "v"};
  I.epsilon = Formula::eq("u", "v");
  for (const auto& [name, arity] : rel_arities) {
    RelationDef def;
    def.arity = arity;
    for (std::size_t i = 0; i < arity; ++i) def.params.push_back("u" + std::to_string(i));
    def.body = Formula::rel(name, def.params);
    I.relations[name] = def;
  }
  return I;
}

namespace {

struct Translator {
  const Interpretation& interp;
  std::set<std::string> reserved;  // names that fresh tuples must avoid
  int counter = 0;
  std::map<std::string, std::vector<std::string>> tuple_of;  // target var -> host tuple

  std::vector<std::string> fresh_tuple(const std::string& base) {
    std::vector<std::string> t;
    for (std::size_t i = 0; i < interp.dim; ++i) {
      std::string cand;
      do {
        ++counter;
        cand = base + "_" + std::to_string(counter);
      } while (reserved.count(cand));
      reserved.insert(cand);
      t.push_back(cand);
    }
    return t;
  }

  const std::vector<std::string>& tuple_for(const std::string& v) {
    auto it = tuple_of.find(v);
    if (it != tuple_of.end()) return it->second;
    return tuple_of.emplace(v, fresh_tuple(v)).first->second;
  }

  Formula apply_def(const std::vector<std::string>& params, const Formula& body,
                    const std::vector<std::string>& args) {
    if (params.size() != args.size())
      throw InterpretationError("interpretation formula has wrong parameter count");
    std::map<std::string, std::string> repl;
    for (std::size_t i = 0; i < params.size(); ++i) repl[params[i]] = args[i];
    return substitute_vars(body, repl);
  }

  Formula go(const Formula& f) {
    switch (f.kind) {
      case Kind::Eq: {
        std::vector<std::string> args = tuple_for(f.vars[0]);
        const auto& t2 = tuple_for(f.vars[1]);
        args.insert(args.end(), t2.begin(), t2.end());
        return apply_def(interp.epsilon_params, interp.epsilon, args);
      }
      case Kind::Rel: {
        auto it = interp.relations.find(f.name);
        if (it == interp.relations.end())
          throw InterpretationError("interpretation does not map relation '" + f.name + "'");
        if (it->second.arity != f.vars.size())
          throw InterpretationError("arity mismatch for interpreted relation '" + f.name + "'");
        std::vector<std::string> args;
        for (const auto& v : f.vars) {
          const auto& t = tuple_for(v);
          args.insert(args.end(), t.begin(), t.end());
        }
        return apply_def(it->second.params, it->second.body, args);
      }
      case Kind::Not:
        return Formula::negate(go(f.children[0]));
      case Kind::And:
        return Formula::conj(go(f.children[0]), go(f.children[1]));
      case Kind::Or:
        return Formula::disj(go(f.children[0]), go(f.children[1]));
      case Kind::Implies:
        return Formula::implies(go(f.children[0]), go(f.children[1]));
      case Kind::Exists:
      case Kind::Forall: {
        auto saved = tuple_of.find(f.name) != tuple_of.end()
                         ? std::optional(tuple_of[f.name])
                         : std::nullopt;
        tuple_of.erase(f.name);
        const auto tuple = tuple_for(f.name);
        Formula body = go(f.children[0]);
        Formula domain = apply_def(interp.delta_params, interp.delta, tuple);
        Formula out = f.kind == Kind::Exists
                          ? Formula::exists_all(tuple, Formula::conj(std::move(domain), std::move(body)))
                          : Formula::forall_all(tuple, Formula::implies(std::move(domain), std::move(body)));
        tuple_of.erase(f.name);
        if (saved) tuple_of[f.name] = *saved;
        return out;
      }
    }
    throw InterpretationError("unreachable");
  }
};

}  // namespace

Formula translate(const Interpretation& interp, const Formula& target) {
  Translator tr{interp, {}, 0, {}};
  tr.reserved = all_variable_names(interp.delta);
  for (const auto& n : all_variable_names(interp.epsilon)) tr.reserved.insert(n);
  for (const auto& [name, def] : interp.relations)
    for (const auto& n : all_variable_names(def.body)) tr.reserved.insert(n);
  // free variables of the target keep stable tuples assigned up front, in
  // order of first occurrence
  for (const auto& v : free_variables(target)) tr.tuple_for(v);
  return tr.go(target);
}

namespace {

struct TupleEvaluator {
  const FiniteStructure& host;
  const Interpretation& interp;

  bool delta(const std::vector<std::size_t>& t) const {
    std::map<std::string, std::size_t> asg;
    for (std::size_t i = 0; i < interp.dim; ++i) asg[interp.delta_params[i]] = t[i];
    return evaluate_indices(host, interp.delta, asg);
  }

  bool epsilon(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) const {
    std::map<std::string, std::size_t> asg;
    for (std::size_t i = 0; i < interp.dim; ++i) {
      asg[interp.epsilon_params[i]] = a[i];
      asg[interp.epsilon_params[interp.dim + i]] = b[i];
    }
    return evaluate_indices(host, interp.epsilon, asg);
  }

  bool rel(const Interpretation::RelationDef& def,
           const std::vector<const std::vector<std::size_t>*>& args) const {
    std::map<std::string, std::size_t> asg;
    std::size_t p = 0;
    for (const auto* a : args)
      for (std::size_t i = 0; i < interp.dim; ++i) asg[def.params[p++]] = (*a)[i];
    return evaluate_indices(host, def.body, asg);
  }
};

std::string class_id(const FiniteStructure& host, const std::vector<std::size_t>& rep) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (i) out << "|";
    out << host.id_of(rep[i]);
  }
  out << "]";
  return out.str();
}

}  // namespace

InterpretedStructure interpret_structure(const FiniteStructure& host,
                                         const Interpretation& interp,
                                         const InterpretOptions& options) {
  if (interp.delta_params.size() != interp.dim ||
      interp.epsilon_params.size() != 2 * interp.dim)
    throw InterpretationError("interpretation parameter lists do not match dimension");

  TupleEvaluator ev{host, interp};

  // enumerate delta-tuples
  std::vector<std::vector<std::size_t>> domain;
  std::vector<std::size_t> tuple(interp.dim, 0);
  while (true) {
    if (ev.delta(tuple)) domain.push_back(tuple);
    std::size_t pos = interp.dim;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < host.size()) {
        done = false;
        break;
      }
      tuple[pos] = 0;
    }
    if (done) break;
  }
  if (domain.empty()) throw InterpretationError("domain formula defines an empty set");

  // partition into classes; every tuple must match exactly one representative
  std::vector<std::vector<std::size_t>> reps;
  std::map<std::vector<std::size_t>, std::size_t> class_of;
  for (const auto& t : domain) {
    if (!ev.epsilon(t, t))
      throw InterpretationError("epsilon is not reflexive on the domain");
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (ev.epsilon(t, reps[c])) {
        if (found)
          throw InterpretationError("epsilon relates a tuple to two class representatives");
        found = c;
      }
    }
    if (!found) {
      reps.push_back(t);
      found = reps.size() - 1;
    }
    class_of[t] = *found;
  }
  // representative-level symmetry (distinct reps must be inequivalent both ways)
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (a != b && ev.epsilon(reps[a], reps[b]))
        throw InterpretationError("epsilon relates two distinct class representatives");

  std::vector<std::string> ids;
  ids.reserve(reps.size());
  for (const auto& r : reps) ids.push_back(class_id(host, r));
  FiniteStructure out(ids);

  // relations on classes, from representatives
  Rng rng(options.seed);
  std::vector<std::vector<std::size_t>> members_of(reps.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    members_of[class_of[domain[i]]].push_back(i);

  for (const auto& [name, def] : interp.relations) {
    out.declare_relation(name, def.arity);
    std::vector<std::size_t> classes(def.arity, 0);
    if (reps.empty()) continue;
    while (true) {
      std::vector<const std::vector<std::size_t>*> args;
      for (auto c : classes) args.push_back(&reps[c]);
      bool value = ev.rel(def, args);
      if (value) {
        out.add_tuple_indices(name, classes);
      }
      // well-definedness: the value must not depend on representative choice
      if (options.well_definedness != WellDefinednessCheck::Off) {
        auto check_combo = [&](const std::vector<const std::vector<std::size_t>*>& combo) {
          if (ev.rel(def, combo) != value)
            throw InterpretationError("relation '" + name +
                                      "' is not invariant under epsilon-equivalence");
        };
        if (options.well_definedness == WellDefinednessCheck::Full) {
          // all member combinations
          std::vector<std::size_t> pick(def.arity, 0);
          while (true) {
            std::vector<const std::vector<std::size_t>*> combo;
            bool ok = true;
            for (std::size_t i = 0; i < def.arity; ++i) {
              const auto& mem = members_of[classes[i]];
              if (pick[i] >= mem.size()) { ok = false; break; }
              combo.push_back(&domain[mem[pick[i]]]);
            }
            if (ok) check_combo(combo);
            std::size_t pos = def.arity;
            bool done = true;
            while (pos > 0) {
              --pos;
              if (++pick[pos] < members_of[classes[pos]].size()) { done = false; break; }
              pick[pos] = 0;
            }
            if (done || def.arity == 0) break;
          }
        } else if (options.well_definedness == WellDefinednessCheck::Sampled) {
          for (std::size_t k = 0; k < options.samples_per_tuple; ++k) {
            std::vector<const std::vector<std::size_t>*> combo;
            for (std::size_t i = 0; i < def.arity; ++i) {
              const auto& mem = members_of[classes[i]];
              combo.push_back(&domain[mem[static_cast<std::size_t>(
                  rng.range(0, static_cast<long long>(mem.size()) - 1))]]);
            }
            check_combo(combo);
          }
        }
        // Representatives mode only evaluates the rep combination, which was
        // already done above.
      }
      std::size_t pos = def.arity;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++classes[pos] < reps.size()) { done = false; break; }
        classes[pos] = 0;
      }
      if (done || def.arity == 0) break;
    }
  }

  InterpretedStructure result{std::move(out), std::move(reps), std::move(class_of)};
  return result;
}

}  // namespace latlab::fol

#include "latlab/fol/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace latlab::fol {

Formula Formula::rel(std::string r, std::vector<std::string> args) {
  Formula f;
  f.kind = Kind::Rel;
  f.name = std::move(r);
  f.vars = std::move(args);
  return f;
}

Formula Formula::eq(std::string a, std::string b) {
  Formula f;
  f.kind = Kind::Eq;
  f.vars = {std::move(a), std::move(b)};
  return f;
}

Formula Formula::negate(Formula f) {
  Formula g;
  g.kind = Kind::Not;
  g.children.push_back(std::move(f));
  return g;
}

static Formula binary(Kind k, Formula a, Formula b) {
  Formula g;
  g.kind = k;
  g.children.push_back(std::move(a));
  g.children.push_back(std::move(b));
  return g;
}

Formula Formula::conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::implies(Formula a, Formula b) { return binary(Kind::Implies, std::move(a), std::move(b)); }

Formula Formula::exists(std::string v, Formula body) {
  Formula g;
  g.kind = Kind::Exists;
  g.name = std::move(v);
  g.children.push_back(std::move(body));
  return g;
}

Formula Formula::forall(std::string v, Formula body) {
  Formula g;
  g.kind = Kind::Forall;
  g.name = std::move(v);
  g.children.push_back(std::move(body));
  return g;
}

Formula Formula::conj_all(std::vector<Formula> fs) {
  if (fs.empty()) throw std::logic_error("conj_all of empty list");
  Formula acc = std::move(fs.back());
  fs.pop_back();
  while (!fs.empty()) {
    acc = conj(std::move(fs.back()), std::move(acc));
    fs.pop_back();
  }
  return acc;
}

Formula Formula::disj_all(std::vector<Formula> fs) {
  if (fs.empty()) throw std::logic_error("disj_all of empty list");
  Formula acc = std::move(fs.back());
  fs.pop_back();
  while (!fs.empty()) {
    acc = disj(std::move(fs.back()), std::move(acc));
    fs.pop_back();
  }
  return acc;
}

Formula Formula::exists_all(const std::vector<std::string>& vs, Formula body) {
  Formula acc = std::move(body);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) acc = exists(*it, std::move(acc));
  return acc;
}

Formula Formula::forall_all(const std::vector<std::string>& vs, Formula body) {
  Formula acc = std::move(body);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) acc = forall(*it, std::move(acc));
  return acc;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  std::map<std::string, std::size_t> arities;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && word_char(text[pos])) ++pos;
    if (pos == start) fail("expected identifier");
    return std::string(text.substr(start, pos - start));
  }

  Formula form() {
    expect('(');
    skip_ws();
    if (pos < text.size() && text[pos] == '=') {
      ++pos;
      std::string a = word(), b = word();
      expect(')');
      return Formula::eq(std::move(a), std::move(b));
    }
    std::string head = word();
    Formula out;
    if (head == "and" || head == "or" || head == "implies") {
      Formula a = form(), b = form();
      Kind k = head == "and" ? Kind::And : head == "or" ? Kind::Or : Kind::Implies;
      out = Formula{};
      out.kind = k;
      out.children.push_back(std::move(a));
      out.children.push_back(std::move(b));
    } else if (head == "not") {
      out = Formula::negate(form());
    } else if (head == "exists" || head == "forall") {
      std::string v = word();
      Formula body = form();
      out = head == "exists" ? Formula::exists(std::move(v), std::move(body))
                             : Formula::forall(std::move(v), std::move(body));
    } else {
      // relation atom
      std::vector<std::string> args;
      while (peek() != ')') args.push_back(word());
      auto [it, inserted] = arities.emplace(head, args.size());
      if (!inserted && it->second != args.size())
        fail("relation '" + head + "' used with arities " + std::to_string(it->second) +
             " and " + std::to_string(args.size()));
      out = Formula::rel(std::move(head), std::move(args));
      expect(')');
      return out;
    }
    expect(')');
    return out;
  }
};

void collect_arities(const Formula& f, std::map<std::string, std::size_t>& out) {
  if (f.kind == Kind::Rel) {
    auto [it, inserted] = out.emplace(f.name, f.vars.size());
    if (!inserted && it->second != f.vars.size())
      throw std::logic_error("relation '" + f.name + "' used with conflicting arities");
  }
  for (const auto& c : f.children) collect_arities(c, out);
}

void free_vars_rec(const Formula& f, std::vector<std::string>& bound,
                   std::vector<std::string>& out) {
  auto note = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  switch (f.kind) {
    case Kind::Rel:
    case Kind::Eq:
      for (const auto& v : f.vars) note(v);
      break;
    case Kind::Exists:
    case Kind::Forall:
      bound.push_back(f.name);
      free_vars_rec(f.children[0], bound, out);
      bound.pop_back();
      break;
    default:
      for (const auto& c : f.children) free_vars_rec(c, bound, out);
  }
}

void all_names_rec(const Formula& f, std::set<std::string>& out) {
  for (const auto& v : f.vars) out.insert(v);
  if (f.kind == Kind::Exists || f.kind == Kind::Forall) out.insert(f.name);
  for (const auto& c : f.children) all_names_rec(c, out);
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p;
  p.text = text;
  Formula f = p.form();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after formula");
  return f;
}

std::string print_formula(const Formula& f) {
  std::ostringstream out;
  switch (f.kind) {
    case Kind::Eq:
      out << "(= " << f.vars[0] << " " << f.vars[1] << ")";
      break;
    case Kind::Rel:
      out << "(" << f.name;
      for (const auto& v : f.vars) out << " " << v;
      out << ")";
      break;
    case Kind::Not:
      out << "(not " << print_formula(f.children[0]) << ")";
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      const char* op = f.kind == Kind::And ? "and" : f.kind == Kind::Or ? "or" : "implies";
      out << "(" << op << " " << print_formula(f.children[0]) << " "
          << print_formula(f.children[1]) << ")";
      break;
    }
    case Kind::Exists:
    case Kind::Forall:
      out << "(" << (f.kind == Kind::Exists ? "exists" : "forall") << " " << f.name << " "
          << print_formula(f.children[0]) << ")";
      break;
  }
  return out.str();
}

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

std::map<std::string, std::size_t> relation_arities(const Formula& f) {
  std::map<std::string, std::size_t> out;
  collect_arities(f, out);
  return out;
}

std::set<std::string> all_variable_names(const Formula& f) {
  std::set<std::string> out;
  all_names_rec(f, out);
  return out;
}

namespace {

Formula substitute_rec(const Formula& f, std::map<std::string, std::string> repl,
                       std::set<std::string>& used, int& fresh_counter) {
  switch (f.kind) {
    case Kind::Rel:
    case Kind::Eq: {
      Formula g = f;
      for (auto& v : g.vars) {
        auto it = repl.find(v);
        if (it != repl.end()) v = it->second;
      }
      return g;
    }
    case Kind::Exists:
    case Kind::Forall: {
      Formula g = f;
      std::string bound = f.name;
      repl.erase(bound);  // inner occurrences of the bound name are not free
      bool collides = false;
      for (const auto& [from, to] : repl)
        if (to == bound) collides = true;
      if (collides) {
        std::string fresh;
        do {
          fresh = bound + "_r" + std::to_string(++fresh_counter);
        } while (used.count(fresh));
        used.insert(fresh);
        std::map<std::string, std::string> rename{{bound, fresh}};
        g.children[0] = substitute_rec(f.children[0], rename, used, fresh_counter);
        g.name = fresh;
        g.children[0] = substitute_rec(g.children[0], repl, used, fresh_counter);
        return g;
      }
      g.children[0] = substitute_rec(f.children[0], repl, used, fresh_counter);
      return g;
    }
    default: {
      Formula g = f;
      for (auto& c : g.children) c = substitute_rec(c, repl, used, fresh_counter);
      return g;
    }
  }
}

}  // namespace

Formula substitute_vars(const Formula& f, const std::map<std::string, std::string>& repl) {
  std::set<std::string> used = all_variable_names(f);
  for (const auto& [from, to] : repl) used.insert(to);
  int counter = 0;
  return substitute_rec(f, repl, used, counter);
}

}  // namespace latlab::fol

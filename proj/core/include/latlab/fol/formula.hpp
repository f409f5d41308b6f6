#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latlab::fol {

// Single-sorted first-order formulas over named relations. Values are
// immutable after construction; all operations on them are pure.
enum class Kind { Rel, Eq, Not, And, Or, Implies, Exists, Forall };

struct Formula {
  Kind kind = Kind::Eq;
  std::string name;                // Rel: relation name; Exists/Forall: bound variable
  std::vector<std::string> vars;   // Rel: argument variables; Eq: exactly two
  std::vector<Formula> children;   // Not: 1; And/Or/Implies: 2; quantifiers: 1

  bool operator==(const Formula&) const = default;

  static Formula rel(std::string r, std::vector<std::string> args);
  static Formula eq(std::string a, std::string b);
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula exists(std::string v, Formula body);
  static Formula forall(std::string v, Formula body);

  // Conveniences for n-ary chains (right-associated; empty conj = "x=x"-free
  // true is not representable, so these require at least one operand).
  static Formula conj_all(std::vector<Formula> fs);
  static Formula disj_all(std::vector<Formula> fs);
  static Formula exists_all(const std::vector<std::string>& vs, Formula body);
  static Formula forall_all(const std::vector<std::string>& vs, Formula body);
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
};

// S-expression grammar:
//   form := (and f f) | (or f f) | (not f) | (implies f f)
//         | (exists v f) | (forall v f) | (= v v) | (REL v ... v)
// Identifiers are ASCII words. Re-parsing print_formula's output yields an
// equal AST. A relation used with two different arities is rejected.
Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);

// Free variables in order of first occurrence.
std::vector<std::string> free_variables(const Formula& f);

// Relation name -> arity; throws ParseError-style logic_error on conflicts.
std::map<std::string, std::size_t> relation_arities(const Formula& f);

// All variable names occurring anywhere (free or bound).
std::set<std::string> all_variable_names(const Formula& f);

// Capture-avoiding substitution of free variable occurrences. Bound variables
// that collide with a replacement are renamed with a deterministic counter.
Formula substitute_vars(const Formula& f, const std::map<std::string, std::string>& repl);

}  // namespace latlab::fol

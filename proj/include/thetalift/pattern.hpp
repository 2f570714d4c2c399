#pragma once
// Small language for lift tables: scalar expressions with variables,
// side conditions, and parameter records whose numeric slots are
// expressions.

#include "thetalift/exact.hpp"
#include "thetalift/ktypes.hpp"
#include "thetalift/notation.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tl {

using Bindings = std::map<std::string, Scalar>;

class Expr {
 public:
  struct Node;

  Expr() = default;
  static Expr parse(std::string_view text);
  static Expr constant(const Scalar& s);

  // Throws std::out_of_range on an unbound variable, std::domain_error on
  // division by zero.
  Scalar eval(const Bindings& b) const;
  // Name when the expression is a single variable.
  std::optional<std::string> bare_variable() const;
  void collect_vars(std::set<std::string>& out) const;
  const std::string& text() const { return text_; }
  bool empty() const { return !root_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

// Conjunction (',') of disjunctions ('|') of atoms:
//   E = E, E != E, E >= E, E > E, E <= E, E < E, int(E), even(E), odd(E),
//   real(E), and '!' before a predicate.  Order comparisons are false on
//   non-real values.  Empty text is true.
class Condition {
 public:
  struct Atom;

  Condition() = default;
  static Condition parse(std::string_view text);
  bool eval(const Bindings& b) const;
  void collect_vars(std::set<std::string>& out) const;
  const std::string& text() const { return text_; }

 private:
  std::vector<std::vector<std::shared_ptr<const Atom>>> clauses_;
  std::string text_;
};

// A parameter record in the notation grammar with expressions in the
// numeric slots; Psi is kept verbatim.
struct ParamPattern {
  bool orthogonal = false;
  int p = 0, q = 0;
  Expr zeta, xi;
  std::vector<Expr> lambda_d;           // Sp
  std::vector<Expr> lambda_l, lambda_r; // O
  std::string psi;
  std::vector<Expr> mu, nu, eps, kappa;
  std::string text;
};

ParamPattern parse_pattern(std::string_view text);
// Variables that occur as a whole slot, so matching can bind them.
std::set<std::string> bindable_vars(const ParamPattern& pat);
std::set<std::string> all_vars(const ParamPattern& pat);

// Evaluates every slot and parses the result; canonical but not validated.
// Throws ParseError / std::domain_error when a slot has the wrong type.
AnyParams instantiate(const ParamPattern& pat, const Bindings& b);

// Binds pattern variables against canonical parameters, trying every
// ordering of the (mu,nu) and (eps,kappa) pairs; succeeds when the condition
// holds and the instantiated pattern equals `actual` after canonicalizing.
std::optional<Bindings> match(const ParamPattern& pat, const Condition& cond, const AnyParams& actual,
                              const Bindings& seed = {});

// Set literal of U(n)-types with expression entries: {(b+1,3,3),(2,1,0)}.
using UKTypePattern = std::vector<Expr>;
std::vector<UKTypePattern> parse_uktype_set(std::string_view text);
// Sorted; throws std::domain_error on non-integral entries.
std::vector<UKType> instantiate_uktypes(const std::vector<UKTypePattern>& pats, const Bindings& b);

}  // namespace tl

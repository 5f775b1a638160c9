// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Structural queries and transformations on the syntax trees: occurring /
// assigned variables, free variables, annotation erasure, capture-avoiding
// substitution, and the well-formedness checker for single-assignment
// programs.

#ifndef SAV_AST_OPS_HPP
#define SAV_AST_OPS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sav/ast.hpp"
#include "sav/commands.hpp"

namespace sav {

// --- occurring / assigned / free variables ----------------------------------

template <class V>
void collect_vars(const ExprPtr<V>& e, std::set<V>& out);
template <class V>
void collect_vars(const BoolExprPtr<V>& b, std::set<V>& out);

template <class V>
std::set<V> vars(const ExprPtr<V>& e);
template <class V>
std::set<V> vars(const BoolExprPtr<V>& b);

// Occurring variables of a command. For annotated families this includes
// the free variables of the invariant annotations.
template <class V>
std::set<V> vars(const ComPtr<V>& c);
template <class V>
std::set<V> vars(const AcomPtr<V>& c);
std::set<SAVariable> vars(const SAComPtr& c);
std::set<SAVariable> vars(const Renaming& r);

// Assigned variables.
template <class V>
std::set<V> assd(const ComPtr<V>& c);
template <class V>
std::set<V> assd(const AcomPtr<V>& c);
std::set<SAVariable> assd(const SAComPtr& c);
std::set<SAVariable> assd(const Renaming& r);

// Free variables of an assertion; quantifiers bind.
template <class V>
std::set<V> free_vars(const AssertionPtr<V>& a);

// --- annotation erasure ------------------------------------------------------

template <class V>
ComPtr<V> erase(const AcomPtr<V>& c);

// --- substitution ------------------------------------------------------------

// Simultaneous substitution of variables by expressions. Free occurrences
// only; quantified variables are renamed when a substituted expression
// would be captured.
template <class V>
using Substitution = std::map<V, ExprPtr<V>>;

template <class V>
ExprPtr<V> subst(const ExprPtr<V>& e, const Substitution<V>& sub);
template <class V>
BoolExprPtr<V> subst(const BoolExprPtr<V>& b, const Substitution<V>& sub);
template <class V>
AssertionPtr<V> subst(const AssertionPtr<V>& a, const Substitution<V>& sub);

// Single-variable convenience form, as used by the assign rule.
template <class V>
AssertionPtr<V> subst(const AssertionPtr<V>& a, const V& x, const ExprPtr<V>& e);

// A variable not occurring in `avoid`, derived from `hint`.
Identifier fresh_variable(const Identifier& hint, const std::set<Identifier>& avoid);
SAVariable fresh_variable(const SAVariable& hint, const std::set<SAVariable>& avoid);

// --- single-assignment well-formedness ---------------------------------------

struct SAViolation {
  std::string clause;   // which restriction failed, e.g. "assign: x ∈ vars(e)"
  std::string path;     // dotted path from the root to the offending subterm
  SourceLoc loc;        // location of the offending subterm, when known
  std::string detail;   // offending variables, pretty-printed
};

struct SACheckResult {
  std::vector<SAViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every restriction of the single-assignment command class:
//   assign: x not in vars(e)
//   seq:    vars(C1) disjoint from assd(C2)
//   if:     vars(b) disjoint from assd(Ct) u assd(Cf)
//   for:    assd(I) = assd(U), rng(U) subset of assd(C),
//           (vars(I) u vars(b) u FV(inv)) disjoint from assd(C)
// Stops at the first violation unless all_violations is set.
SACheckResult check_sa_wellformed(const SAComPtr& c, bool all_violations = false);

// True iff the program assigns no free variable of the assertion.
bool check_no_assign(const AssertionPtr<SAVariable>& a, const SAComPtr& c);

// --- renamings as commands ----------------------------------------------------

// A renaming written out as an assignment sequence (skip when empty).
ComPtr<SAVariable> renaming_to_com(const Renaming& r, SourceLoc loc = {});
AcomPtr<SAVariable> renaming_to_acom(const Renaming& r, SourceLoc loc = {});

// Applies a renaming to an assertion: each target variable is replaced by
// its source, simultaneously.
AssertionPtr<SAVariable> apply_renaming(const Renaming& r,
                                        const AssertionPtr<SAVariable>& a);
BoolExprPtr<SAVariable> apply_renaming(const Renaming& r, const BoolExprPtr<SAVariable>& b);
ExprPtr<SAVariable> apply_renaming(const Renaming& r, const ExprPtr<SAVariable>& e);

}  // namespace sav

#endif  // SAV_AST_OPS_HPP

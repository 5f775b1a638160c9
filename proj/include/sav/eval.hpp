// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Side-effect-free evaluation of expressions, boolean expressions and
// assertions in a state, plus the state/assertion actions of renamings.

#ifndef SAV_EVAL_HPP
#define SAV_EVAL_HPP

#include <cstdint>
#include <optional>

#include "sav/ast.hpp"
#include "sav/commands.hpp"
#include "sav/state.hpp"
#include "sav/symbols.hpp"

namespace sav {

inline constexpr std::uint32_t kDefaultRecursionBudget = 512;

template <class V>
BigInt eval_expr(const ExprPtr<V>& e, const State<V>& s, const SymbolTable& defs,
                 std::uint32_t budget = kDefaultRecursionBudget);

template <class V>
bool eval_bool(const BoolExprPtr<V>& b, const State<V>& s, const SymbolTable& defs,
               std::uint32_t budget = kDefaultRecursionBudget);

// First-order satisfaction. Quantifiers are only evaluable with a bound:
// they then range over [-*qbound, *qbound]. Without a bound a quantified
// assertion raises EvalError.
template <class V>
bool eval_assert(const AssertionPtr<V>& a, const State<V>& s, const SymbolTable& defs,
                 std::optional<std::int64_t> qbound = std::nullopt,
                 std::uint32_t budget = kDefaultRecursionBudget);

// The state action of a renaming: (R(s))(x) = s(R(x)) for targets x,
// s(x) elsewhere. Agrees with executing the renaming as a command.
State<SAVariable> apply_renaming_state(const Renaming& r, const State<SAVariable>& s);

}  // namespace sav

#endif  // SAV_EVAL_HPP

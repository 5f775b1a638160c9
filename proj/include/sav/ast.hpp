// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Abstract syntax for integer expressions, boolean expressions and
// first-order assertions, parameterized by the variable family V
// (Identifier for plain programs, SAVariable for single-assignment ones).
// All nodes are immutable after construction and freely shareable.

#ifndef SAV_AST_HPP
#define SAV_AST_HPP

#include <memory>
#include <variant>
#include <vector>

#include "sav/basics.hpp"
#include "sav/variables.hpp"

namespace sav {

enum class BinOp { Add, Sub, Mul };
enum class CmpOp { Eq, Ne, Le, Lt, Ge, Gt };

template <class V>
struct Expr;
template <class V>
using ExprPtr = std::shared_ptr<const Expr<V>>;

template <class V>
struct Expr {
  struct Lit {
    BigInt value;
  };
  struct Var {
    V var;
  };
  struct Bin {
    BinOp op;
    ExprPtr<V> lhs, rhs;
  };
  // Application of a declared function symbol, e.g. fact(n - 1).
  struct App {
    Identifier fn;
    std::vector<ExprPtr<V>> args;
  };

  using Node = std::variant<Lit, Var, Bin, App>;
  Node node;
};

template <class V>
ExprPtr<V> mk_lit(BigInt value) {
  return std::make_shared<Expr<V>>(Expr<V>{typename Expr<V>::Lit{std::move(value)}});
}
template <class V>
ExprPtr<V> mk_var(V var) {
  return std::make_shared<Expr<V>>(Expr<V>{typename Expr<V>::Var{std::move(var)}});
}
template <class V>
ExprPtr<V> mk_bin(BinOp op, ExprPtr<V> lhs, ExprPtr<V> rhs) {
  return std::make_shared<Expr<V>>(
      Expr<V>{typename Expr<V>::Bin{op, std::move(lhs), std::move(rhs)}});
}
template <class V>
ExprPtr<V> mk_app(Identifier fn, std::vector<ExprPtr<V>> args) {
  return std::make_shared<Expr<V>>(
      Expr<V>{typename Expr<V>::App{std::move(fn), std::move(args)}});
}

template <class V>
struct BoolExpr;
template <class V>
using BoolExprPtr = std::shared_ptr<const BoolExpr<V>>;

template <class V>
struct BoolExpr {
  struct Lit {
    bool value;
  };
  struct Cmp {
    CmpOp op;
    ExprPtr<V> lhs, rhs;
  };
  struct Not {
    BoolExprPtr<V> arg;
  };
  struct And {
    BoolExprPtr<V> lhs, rhs;
  };
  struct Or {
    BoolExprPtr<V> lhs, rhs;
  };

  using Node = std::variant<Lit, Cmp, Not, And, Or>;
  Node node;
};

template <class V>
BoolExprPtr<V> mk_bool_lit(bool value) {
  return std::make_shared<BoolExpr<V>>(BoolExpr<V>{typename BoolExpr<V>::Lit{value}});
}
template <class V>
BoolExprPtr<V> mk_cmp(CmpOp op, ExprPtr<V> lhs, ExprPtr<V> rhs) {
  return std::make_shared<BoolExpr<V>>(
      BoolExpr<V>{typename BoolExpr<V>::Cmp{op, std::move(lhs), std::move(rhs)}});
}
template <class V>
BoolExprPtr<V> mk_bool_not(BoolExprPtr<V> arg) {
  return std::make_shared<BoolExpr<V>>(
      BoolExpr<V>{typename BoolExpr<V>::Not{std::move(arg)}});
}
template <class V>
BoolExprPtr<V> mk_bool_and(BoolExprPtr<V> lhs, BoolExprPtr<V> rhs) {
  return std::make_shared<BoolExpr<V>>(
      BoolExpr<V>{typename BoolExpr<V>::And{std::move(lhs), std::move(rhs)}});
}
template <class V>
BoolExprPtr<V> mk_bool_or(BoolExprPtr<V> lhs, BoolExprPtr<V> rhs) {
  return std::make_shared<BoolExpr<V>>(
      BoolExpr<V>{typename BoolExpr<V>::Or{std::move(lhs), std::move(rhs)}});
}

template <class V>
struct Assertion;
template <class V>
using AssertionPtr = std::shared_ptr<const Assertion<V>>;

// First-order assertions: boolean expressions extended with implication
// and quantifiers over integer variables.
template <class V>
struct Assertion {
  struct Lit {
    bool value;
  };
  struct Cmp {
    CmpOp op;
    ExprPtr<V> lhs, rhs;
  };
  struct Not {
    AssertionPtr<V> arg;
  };
  struct And {
    AssertionPtr<V> lhs, rhs;
  };
  struct Or {
    AssertionPtr<V> lhs, rhs;
  };
  struct Implies {
    AssertionPtr<V> lhs, rhs;
  };
  struct Forall {
    V var;
    AssertionPtr<V> body;
  };
  struct Exists {
    V var;
    AssertionPtr<V> body;
  };

  using Node = std::variant<Lit, Cmp, Not, And, Or, Implies, Forall, Exists>;
  Node node;
};

template <class V>
AssertionPtr<V> mk_assert_lit(bool value) {
  return std::make_shared<Assertion<V>>(Assertion<V>{typename Assertion<V>::Lit{value}});
}
template <class V>
AssertionPtr<V> mk_assert_cmp(CmpOp op, ExprPtr<V> lhs, ExprPtr<V> rhs) {
  return std::make_shared<Assertion<V>>(
      Assertion<V>{typename Assertion<V>::Cmp{op, std::move(lhs), std::move(rhs)}});
}
template <class V>
AssertionPtr<V> mk_assert_not(AssertionPtr<V> arg) {
  return std::make_shared<Assertion<V>>(
      Assertion<V>{typename Assertion<V>::Not{std::move(arg)}});
}
template <class V>
AssertionPtr<V> mk_assert_and(AssertionPtr<V> lhs, AssertionPtr<V> rhs) {
  return std::make_shared<Assertion<V>>(
      Assertion<V>{typename Assertion<V>::And{std::move(lhs), std::move(rhs)}});
}
template <class V>
AssertionPtr<V> mk_assert_or(AssertionPtr<V> lhs, AssertionPtr<V> rhs) {
  return std::make_shared<Assertion<V>>(
      Assertion<V>{typename Assertion<V>::Or{std::move(lhs), std::move(rhs)}});
}
template <class V>
AssertionPtr<V> mk_assert_implies(AssertionPtr<V> lhs, AssertionPtr<V> rhs) {
  return std::make_shared<Assertion<V>>(
      Assertion<V>{typename Assertion<V>::Implies{std::move(lhs), std::move(rhs)}});
}
template <class V>
AssertionPtr<V> mk_assert_forall(V var, AssertionPtr<V> body) {
  return std::make_shared<Assertion<V>>(
      Assertion<V>{typename Assertion<V>::Forall{std::move(var), std::move(body)}});
}
template <class V>
AssertionPtr<V> mk_assert_exists(V var, AssertionPtr<V> body) {
  return std::make_shared<Assertion<V>>(
      Assertion<V>{typename Assertion<V>::Exists{std::move(var), std::move(body)}});
}

// Structural (deep) equality.
template <class V>
bool equal(const ExprPtr<V>& a, const ExprPtr<V>& b);
template <class V>
bool equal(const BoolExprPtr<V>& a, const BoolExprPtr<V>& b);
template <class V>
bool equal(const AssertionPtr<V>& a, const AssertionPtr<V>& b);

// The embedding of a boolean expression into the assertion language; the
// identity on the underlying syntax tree.
template <class V>
AssertionPtr<V> embed(const BoolExprPtr<V>& b);

}  // namespace sav

#endif  // SAV_AST_HPP

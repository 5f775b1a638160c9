// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef SAV_SYMBOLS_HPP
#define SAV_SYMBOLS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sav/ast.hpp"
#include "sav/variables.hpp"

namespace sav {

// A function definition usable by the bounded evaluator. Clauses with a
// literal in the decreasing argument position are base cases; the step
// clause has identifier parameters throughout and may call the function
// itself, provided every self-call decreases one fixed argument by a
// positive constant (checked syntactically at declaration time).
//
// Evaluation below the smallest base case clamps to that base case, which
// keeps grid evaluation total; fact(n) therefore evaluates to 1 for all
// n <= 0.
struct FunctionDef {
  std::vector<Identifier> params;
  struct BaseCase {
    BigInt pattern;                  // value of the decreasing argument
    ExprPtr<Identifier> value;       // other params bound as in the step clause
  };
  std::vector<BaseCase> base_cases;  // sorted by pattern, ascending
  ExprPtr<Identifier> step;          // absent for purely tabulated functions
  std::size_t decreasing_arg = 0;    // index of the decreasing argument
  bool recursive = false;
};

struct FunctionDecl {
  Identifier name;
  std::size_t arity = 0;
  std::optional<FunctionDef> def;
};

// Declared function symbols: the unit's declarations plus the built-in
// factorial (fact(0) = 1, fact(n) = n * fact(n - 1) for n > 0).
class SymbolTable {
 public:
  static SymbolTable with_builtins();

  // Fails on duplicate names (including redeclaring a built-in).
  void declare(FunctionDecl decl);

  const FunctionDecl* lookup(const Identifier& name) const;

  const std::map<Identifier, FunctionDecl>& all() const { return decls_; }

 private:
  std::map<Identifier, FunctionDecl> decls_;
};

}  // namespace sav

#endif  // SAV_SYMBOLS_HPP

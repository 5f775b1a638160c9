// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef SAV_BASICS_HPP
#define SAV_BASICS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sav {

// Program values are unbounded integers; machine words would falsify
// algebraic facts the checkers rely on (e.g. f = fact(i-1) after many
// iterations).
using BigInt = boost::multiprecision::cpp_int;

struct SourceLoc {
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
  std::string str() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the interpreter / assertion evaluator (missing definition,
// recursion budget, unbounded quantifier without a bound, ...).
struct EvalError : Error {
  using Error::Error;
};

// Raised when a self-check on translator output fails; indicates a bug in
// the translator, not in user input.
struct InternalError : Error {
  using Error::Error;
};

// Raised when an exhaustive grid would exceed the configured point cap.
struct GridCapError : Error {
  using Error::Error;
};

// Handy visitor combinator for std::variant.
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace sav

#endif  // SAV_BASICS_HPP

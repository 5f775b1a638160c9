// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive falsification of assertions over finite integer grids. The
// scan is a data-parallel kernel with an OpenMP implementation and a
// serial reference; both report the lexicographically first failing
// assignment, so their results are identical and the serial engine is
// kept as the oracle for the parallel one.

#ifndef SAV_GRID_HPP
#define SAV_GRID_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sav/ast.hpp"
#include "sav/eval.hpp"
#include "sav/state.hpp"
#include "sav/symbols.hpp"

namespace sav {

struct GridRange {
  std::int64_t lo = -8;
  std::int64_t hi = 8;

  std::uint64_t extent() const {
    return lo > hi ? 0 : static_cast<std::uint64_t>(hi - lo + 1);
  }
};

// A default range plus per-identifier overrides (an override applies to
// every version of that identifier).
struct RangePolicy {
  GridRange fallback;
  std::map<Identifier, GridRange> per_base;

  template <class V>
  GridRange range_for(const V& var) const {
    auto it = per_base.find(base_of(var));
    return it == per_base.end() ? fallback : it->second;
  }
};

inline constexpr std::uint64_t kDefaultGridCap = 10000000;  // 10^7 points

template <class V>
struct GridVerdict {
  std::optional<State<V>> counterexample;  // empty <=> valid on the grid
  std::uint64_t points = 0;                // grid size

  bool valid_on_grid() const { return !counterexample.has_value(); }
};

enum class GridEngine { Serial, Parallel, Auto };

// Evaluates `a` over all assignments of `vars` drawn from the policy's
// ranges, in lexicographic order (variables sorted, values ascending).
// Returns the first counterexample or a valid-on-grid verdict. Throws
// GridCapError if the grid exceeds `cap` points. Quantifiers inside `a`
// are bounded by the fallback range.
template <class V>
GridVerdict<V> bounded_validity(const AssertionPtr<V>& a, const std::vector<V>& vars,
                                const RangePolicy& ranges, const SymbolTable& defs,
                                std::uint64_t cap = kDefaultGridCap,
                                GridEngine engine = GridEngine::Auto);

// Convenience: grid over the assertion's own free variables.
template <class V>
GridVerdict<V> bounded_validity(const AssertionPtr<V>& a, const RangePolicy& ranges,
                                const SymbolTable& defs,
                                std::uint64_t cap = kDefaultGridCap,
                                GridEngine engine = GridEngine::Auto);

}  // namespace sav

#endif  // SAV_GRID_HPP

// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Verification condition generation by backward weakest-precondition
// propagation with annotated invariants as cut points. Each while loop
// contributes an invariant-preservation and an invariant-exit condition;
// the remaining obligation surfaces as the single entry condition
// pre -> wp(program, post).

#ifndef SAV_VCGEN_HPP
#define SAV_VCGEN_HPP

#include <string>
#include <vector>

#include "sav/ast_ops.hpp"
#include "sav/commands.hpp"
#include "sav/grid.hpp"
#include "sav/symbols.hpp"

namespace sav {

struct VcOrigin {
  std::string rule;  // "entry" | "while-preserve" | "while-exit"
  std::string path;  // dotted path to the generating node ("" for entry)
  SourceLoc loc;

  std::string str() const {
    return rule + " @ " + (loc.known() ? loc.str() : "?:?");
  }
};

template <class V>
struct VerificationCondition {
  AssertionPtr<V> formula;
  VcOrigin origin;
};

// Weakest precondition of `post` through `c`; loop conditions are appended
// to `out` as they are encountered.
template <class V>
AssertionPtr<V> wp(const AcomPtr<V>& c, const AssertionPtr<V>& post,
                   std::vector<VerificationCondition<V>>& out);

// All verification conditions of a triple: the entry condition first, then
// per loop (in pre-order of occurrence) the preservation and exit
// conditions.
template <class V>
std::vector<VerificationCondition<V>> vcs(const Triple<V>& t);

template <class V>
struct VcVerdict {
  VerificationCondition<V> vc;
  GridVerdict<V> verdict;
};

template <class V>
struct BoundedVerification {
  std::vector<VcVerdict<V>> results;

  bool all_valid() const {
    for (const auto& r : results)
      if (!r.verdict.valid_on_grid()) return false;
    return true;
  }
};

// Generates the conditions of `t` and checks each exhaustively over the
// given ranges.
template <class V>
BoundedVerification<V> verify_bounded(const Triple<V>& t, const RangePolicy& ranges,
                                      const SymbolTable& defs,
                                      std::uint64_t cap = kDefaultGridCap);

}  // namespace sav

#endif  // SAV_VCGEN_HPP

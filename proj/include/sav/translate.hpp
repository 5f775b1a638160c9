// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// The translation of annotated While programs into annotated
// single-assignment form, and the reverse expansion of single-assignment
// programs back into annotated While programs.
//
// Versions are lists of counters managed by four combinators:
//   next_version  bumps the current counter (straight-line assignment),
//   new_version   opens a fresh counter level (entering a loop body),
//   jump_version  collapses the innermost level (leaving a loop),
//   version_prec  compares version heights by their leading counter.

#ifndef SAV_TRANSLATE_HPP
#define SAV_TRANSLATE_HPP

#include <map>
#include <set>

#include "sav/ast_ops.hpp"
#include "sav/commands.hpp"
#include "sav/variables.hpp"

namespace sav {

Version next_version(const Version& v);
Version new_version(const Version& v);
// Defined only on versions of length >= 2; a shorter argument means the
// translator itself is broken, so this throws InternalError.
Version jump_version(const Version& v);
bool version_prec(const Version& a, const Version& b);

// A total map from identifiers to versions, defaulting to [0].
class VersionMap {
 public:
  VersionMap() = default;

  const Version& get(const Identifier& x) const;
  void set(const Identifier& x, Version v);

  SAVariable sa(const Identifier& x) const { return SAVariable{x, get(x)}; }

  // Identifiers with an explicit entry (others implicitly map to [0]).
  const std::map<Identifier, Version>& entries() const { return entries_; }

  // Makes the entry for every identifier in `universe` explicit, so that
  // reports show unchanged variables too.
  void materialize(const std::set<Identifier>& universe);

  bool operator==(const VersionMap&) const = default;

 private:
  std::map<Identifier, Version> entries_;
};

// Pointwise maximum by version head: keeps v(x) when w(x) precedes it,
// otherwise w(x).
VersionMap sup(const VersionMap& v, const VersionMap& w);

// The catch-up renaming from v to w: one copy x_w(x) := x_v(x) per
// identifier whose version strictly grew.
Renaming merge(const VersionMap& v, const VersionMap& w);

// The post-loop renaming: one copy x_jump(l) := x_l per element of X.
Renaming upd(const std::set<SAVariable>& xs);

// Renames every variable of an expression / assertion to its current
// version.
ExprPtr<SAVariable> rename_expr(const VersionMap& v, const ExprPtr<Identifier>& e);
BoolExprPtr<SAVariable> rename_bool(const VersionMap& v, const BoolExprPtr<Identifier>& b);
AssertionPtr<SAVariable> rename_assert(const VersionMap& v, const AssertionPtr<Identifier>& a);

struct TranslationResult {
  VersionMap final_versions;
  SAComPtr program;
};

// Command-level translation. The result is checked to be a well-formed
// single-assignment program and to leave versions of unassigned variables
// untouched; a failure of either check throws InternalError.
TranslationResult tsa_cmd(const VersionMap& v0, const AcomPtr<Identifier>& c);

struct TripleTranslation {
  SATriple triple;
  VersionMap initial_versions;
  VersionMap final_versions;
  std::set<Identifier> universe;  // vars(C) u FV(pre) u FV(post)
};

// Triple-level translation: renames the precondition with the initial
// versions, translates the program, renames the postcondition with the
// final versions. Verifies that the translated program assigns no free
// variable of the translated precondition.
TripleTranslation tsa_triple(const AssertionPtr<Identifier>& pre,
                             const AcomPtr<Identifier>& program,
                             const AssertionPtr<Identifier>& post,
                             const VersionMap& v0 = VersionMap{});

// Expands a single-assignment program into an annotated While program:
// for-loops become  I ; while b invariant inv { body ; U }  with the
// renamings written out as assignment sequences.
AcomPtr<SAVariable> t_inv(const SAComPtr& c);

}  // namespace sav

#endif  // SAV_TRANSLATE_HPP

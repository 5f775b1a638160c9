// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Command syntax. Three families:
//   Com<V>   plain While commands (what the interpreter runs),
//   Acom<V>  While commands with loop-invariant annotations,
//   SACom    annotated single-assignment commands with for-loops that
//            carry initialization / update renamings.

#ifndef SAV_COMMANDS_HPP
#define SAV_COMMANDS_HPP

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "sav/ast.hpp"
#include "sav/variables.hpp"

namespace sav {

template <class V>
struct Com;
template <class V>
using ComPtr = std::shared_ptr<const Com<V>>;

template <class V>
struct Com {
  struct Skip {};
  struct Assign {
    V target;
    ExprPtr<V> value;
  };
  struct Seq {
    ComPtr<V> first, second;
  };
  struct If {
    BoolExprPtr<V> cond;
    ComPtr<V> then_branch, else_branch;
  };
  struct While {
    BoolExprPtr<V> cond;
    ComPtr<V> body;
  };

  using Node = std::variant<Skip, Assign, Seq, If, While>;
  Node node;
  SourceLoc loc;
};

template <class V>
struct Acom;
template <class V>
using AcomPtr = std::shared_ptr<const Acom<V>>;

template <class V>
struct Acom {
  struct Skip {};
  struct Assign {
    V target;
    ExprPtr<V> value;
  };
  struct Seq {
    AcomPtr<V> first, second;
  };
  struct If {
    BoolExprPtr<V> cond;
    AcomPtr<V> then_branch, else_branch;
  };
  struct While {
    BoolExprPtr<V> cond;
    AssertionPtr<V> invariant;
    AcomPtr<V> body;
  };

  using Node = std::variant<Skip, Assign, Seq, If, While>;
  Node node;
  SourceLoc loc;
};

// An ordered sequence of copy assignments target := source over distinct
// variables, doubling as a finite bijection from targets to sources.
// Entries are kept sorted by (target base, target version) so that every
// renaming the tool produces or prints is deterministic.
class Renaming {
 public:
  using Entry = std::pair<SAVariable, SAVariable>;  // (target, source)

  Renaming() = default;
  // Sorts and validates: targets pairwise distinct, sources pairwise
  // distinct, and no variable occurs on both sides.
  explicit Renaming(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // The bijection view: source of a target, if the target is in the domain.
  const SAVariable* lookup(const SAVariable& target) const;

  std::vector<SAVariable> targets() const;
  std::vector<SAVariable> sources() const;

  // Swaps the two sides; the result is again a valid renaming.
  Renaming inverse() const;

  bool operator==(const Renaming&) const = default;

 private:
  std::vector<Entry> entries_;
};

struct SACom;
using SAComPtr = std::shared_ptr<const SACom>;

struct SACom {
  struct Skip {};
  struct Assign {
    SAVariable target;
    ExprPtr<SAVariable> value;
  };
  struct Seq {
    SAComPtr first, second;
  };
  struct If {
    BoolExprPtr<SAVariable> cond;
    SAComPtr then_branch, else_branch;
  };
  struct For {
    Renaming init;
    BoolExprPtr<SAVariable> cond;
    Renaming update;
    AssertionPtr<SAVariable> invariant;
    SAComPtr body;
  };

  using Node = std::variant<Skip, Assign, Seq, If, For>;
  Node node;
  SourceLoc loc;
};

// --- constructors ---------------------------------------------------------

template <class V>
ComPtr<V> mk_skip(SourceLoc loc = {}) {
  return std::make_shared<Com<V>>(Com<V>{typename Com<V>::Skip{}, loc});
}
template <class V>
ComPtr<V> mk_assign(V target, ExprPtr<V> value, SourceLoc loc = {}) {
  return std::make_shared<Com<V>>(
      Com<V>{typename Com<V>::Assign{std::move(target), std::move(value)}, loc});
}
template <class V>
ComPtr<V> mk_if(BoolExprPtr<V> cond, ComPtr<V> t, ComPtr<V> f, SourceLoc loc = {}) {
  return std::make_shared<Com<V>>(
      Com<V>{typename Com<V>::If{std::move(cond), std::move(t), std::move(f)}, loc});
}
template <class V>
ComPtr<V> mk_while(BoolExprPtr<V> cond, ComPtr<V> body, SourceLoc loc = {}) {
  return std::make_shared<Com<V>>(
      Com<V>{typename Com<V>::While{std::move(cond), std::move(body)}, loc});
}
// Sequencing re-associates to the right so that pretty-printing (which is
// flat) round-trips to the identical tree.
template <class V>
ComPtr<V> mk_seq(ComPtr<V> first, ComPtr<V> second, SourceLoc loc = {});

template <class V>
AcomPtr<V> mk_askip(SourceLoc loc = {}) {
  return std::make_shared<Acom<V>>(Acom<V>{typename Acom<V>::Skip{}, loc});
}
template <class V>
AcomPtr<V> mk_aassign(V target, ExprPtr<V> value, SourceLoc loc = {}) {
  return std::make_shared<Acom<V>>(
      Acom<V>{typename Acom<V>::Assign{std::move(target), std::move(value)}, loc});
}
template <class V>
AcomPtr<V> mk_aif(BoolExprPtr<V> cond, AcomPtr<V> t, AcomPtr<V> f, SourceLoc loc = {}) {
  return std::make_shared<Acom<V>>(
      Acom<V>{typename Acom<V>::If{std::move(cond), std::move(t), std::move(f)}, loc});
}
template <class V>
AcomPtr<V> mk_awhile(BoolExprPtr<V> cond, AssertionPtr<V> invariant, AcomPtr<V> body,
                     SourceLoc loc = {}) {
  return std::make_shared<Acom<V>>(Acom<V>{
      typename Acom<V>::While{std::move(cond), std::move(invariant), std::move(body)}, loc});
}
template <class V>
AcomPtr<V> mk_aseq(AcomPtr<V> first, AcomPtr<V> second, SourceLoc loc = {});

SAComPtr mk_sa_skip(SourceLoc loc = {});
SAComPtr mk_sa_assign(SAVariable target, ExprPtr<SAVariable> value, SourceLoc loc = {});
SAComPtr mk_sa_if(BoolExprPtr<SAVariable> cond, SAComPtr t, SAComPtr f, SourceLoc loc = {});
SAComPtr mk_sa_for(Renaming init, BoolExprPtr<SAVariable> cond, Renaming update,
                   AssertionPtr<SAVariable> invariant, SAComPtr body, SourceLoc loc = {});
SAComPtr mk_sa_seq(SAComPtr first, SAComPtr second, SourceLoc loc = {});

template <class V>
ComPtr<V> mk_seq(ComPtr<V> first, ComPtr<V> second, SourceLoc loc) {
  if (auto* seq = std::get_if<typename Com<V>::Seq>(&first->node)) {
    return mk_seq<V>(seq->first, mk_seq<V>(seq->second, std::move(second), loc), loc);
  }
  return std::make_shared<Com<V>>(
      Com<V>{typename Com<V>::Seq{std::move(first), std::move(second)}, loc});
}

template <class V>
AcomPtr<V> mk_aseq(AcomPtr<V> first, AcomPtr<V> second, SourceLoc loc) {
  if (auto* seq = std::get_if<typename Acom<V>::Seq>(&first->node)) {
    return mk_aseq<V>(seq->first, mk_aseq<V>(seq->second, std::move(second), loc), loc);
  }
  return std::make_shared<Acom<V>>(
      Acom<V>{typename Acom<V>::Seq{std::move(first), std::move(second)}, loc});
}

// --- deep equality (ignores source locations) ------------------------------

template <class V>
bool equal(const ComPtr<V>& a, const ComPtr<V>& b);
template <class V>
bool equal(const AcomPtr<V>& a, const AcomPtr<V>& b);
bool equal(const SAComPtr& a, const SAComPtr& b);

// --- specifications ---------------------------------------------------------

template <class V>
struct Triple {
  AssertionPtr<V> pre;
  AcomPtr<V> program;
  AssertionPtr<V> post;
};

struct SATriple {
  AssertionPtr<SAVariable> pre;
  SAComPtr program;
  AssertionPtr<SAVariable> post;
};

}  // namespace sav

#endif  // SAV_COMMANDS_HPP

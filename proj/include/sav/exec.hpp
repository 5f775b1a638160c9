// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Big-step interpreter for plain While commands. The only source of
// divergence in the language is the while loop, so fuel is charged once
// per loop unfolding and straight-line code is free; running out of fuel
// is a normal outcome meaning "no verdict within budget".

#ifndef SAV_EXEC_HPP
#define SAV_EXEC_HPP

#include <cstdint>
#include <optional>

#include "sav/commands.hpp"
#include "sav/eval.hpp"
#include "sav/state.hpp"
#include "sav/symbols.hpp"

namespace sav {

template <class V>
struct ExecOutcome {
  std::optional<State<V>> final_state;  // empty <=> fuel exhausted

  bool terminated() const { return final_state.has_value(); }
  const State<V>& state() const { return *final_state; }
};

inline constexpr std::uint64_t kDefaultFuel = 10000;

template <class V>
ExecOutcome<V> exec(const ComPtr<V>& c, const State<V>& s, std::uint64_t fuel,
                    const SymbolTable& defs);

}  // namespace sav

#endif  // SAV_EXEC_HPP

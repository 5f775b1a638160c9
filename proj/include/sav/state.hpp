// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef SAV_STATE_HPP
#define SAV_STATE_HPP

#include <map>

#include "sav/basics.hpp"
#include "sav/variables.hpp"

namespace sav {

// A total map from variables to integers, represented by a finite map with
// default value 0.
template <class V>
class State {
 public:
  State() = default;
  explicit State(std::map<V, BigInt> bindings) : bindings_(std::move(bindings)) {}

  BigInt get(const V& var) const {
    auto it = bindings_.find(var);
    return it == bindings_.end() ? BigInt(0) : it->second;
  }

  void set(const V& var, BigInt value) { bindings_[var] = std::move(value); }

  State updated(const V& var, BigInt value) const {
    State copy = *this;
    copy.set(var, std::move(value));
    return copy;
  }

  const std::map<V, BigInt>& bindings() const { return bindings_; }

  bool operator==(const State&) const = default;

 private:
  std::map<V, BigInt> bindings_;
};

}  // namespace sav

#endif  // SAV_STATE_HPP

// Part of the sav project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef SAV_VARIABLES_HPP
#define SAV_VARIABLES_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sav/basics.hpp"

namespace sav {

// A plain program variable. Nonempty, [A-Za-z][A-Za-z0-9_]*, compared by
// name.
class Identifier {
 public:
  Identifier() = default;
  explicit Identifier(std::string name);

  const std::string& name() const { return name_; }

  auto operator<=>(const Identifier&) const = default;

  static bool valid_name(const std::string& name);

 private:
  std::string name_;
};

// A variable version: a nonempty list of counters, most recent first.
// Rendered with '.' between indices, e.g. [1,2,0] -> "1.2.0".
struct Version {
  std::vector<std::uint32_t> indices;

  Version() = default;
  explicit Version(std::vector<std::uint32_t> idx);

  std::uint32_t head() const { return indices.front(); }
  std::size_t size() const { return indices.size(); }

  std::string str() const;

  auto operator<=>(const Version&) const = default;
};

// Convenience: the version that every variable starts with.
Version version_zero();

// A single-assignment variable: an identifier paired with a version.
struct SAVariable {
  Identifier base;
  Version version;

  SAVariable() = default;
  SAVariable(Identifier b, Version v) : base(std::move(b)), version(std::move(v)) {}

  std::string str() const { return base.name() + "_" + version.str(); }

  auto operator<=>(const SAVariable&) const = default;
};

inline std::string var_text(const Identifier& v) { return v.name(); }
inline std::string var_text(const SAVariable& v) { return v.str(); }

// The identifier component of a variable; for plain variables this is the
// variable itself. Used to apply per-identifier grid ranges uniformly.
inline const Identifier& base_of(const Identifier& v) { return v; }
inline const Identifier& base_of(const SAVariable& v) { return v.base; }

}  // namespace sav

#endif  // SAV_VARIABLES_HPP

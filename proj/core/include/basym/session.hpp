#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "basym/rees.hpp"

namespace basym {

struct Window {
  std::int64_t t_min = 1;
  std::int64_t t_max = 4;
  /// Cap on phi(degree) for support comparisons.
  Rational wcap = Rational(60);

  friend bool operator==(const Window&, const Window&) = default;
};

struct NamedIdeal {
  std::string name;
  std::vector<Polynomial> generators;
};

/// coker of the relation columns, one entry per generator shift.
struct NamedModule {
  std::string name;
  std::vector<Degree> shifts;
  std::vector<std::vector<Polynomial>> relations;
};

/// Parsed input file:
///
///   field 32003;
///   grading Z^1;                 # or Z^2 + Z/3
///   ring x:1 y:1 z:1;            # degrees as 3 or (1,0,2)
///   phi 1;
///   ideal I = x^2+y^2+z^2, x^5+y^5+z^5;
///   module M shifts 0, 0 relations [x, 0], [0, y];
///   powers I of M;               # default: every ideal, M = S
///   window t=1..4 wcap=60;
struct Session {
  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
  GroupPtr group;
  RingPtr ring;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedModule> modules;
  std::vector<std::string> powers;
  std::string module_name;
  Window window;

  const NamedIdeal& ideal(const std::string& name) const;
  const NamedModule& module(const std::string& name) const;
  /// The module whose products with powers are studied (S if none named).
  Presentation base_module() const;
  Presentation presentation(const NamedModule& m) const;
  /// Generator lists of the ideals named by `powers`.
  std::vector<std::vector<Polynomial>> power_ideals() const;
  ReesSetup rees_setup(bool shifted = false) const;
};

/// Throws SyntaxError (message carries line and column), Inhomogeneous (with
/// the offending generator) or Positivity.
Session parse_session(std::string_view text);
std::string print_session(const Session& s);

bool operator==(const Session& a, const Session& b);

/// "line 3, column 7" for a byte offset.
std::string describe_offset(std::string_view text, std::size_t offset);

}  // namespace basym

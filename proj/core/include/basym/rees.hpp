#pragma once

#include <cstdint>
#include <vector>

#include "basym/homalg.hpp"

namespace basym {

/// S[T_{i,j}] over ideals I_1..I_s of S. Variables of `ring` are the S
/// variables followed by the T variables block by block; `fiber` is k[T].
///
/// Standard grading: deg T_{i,j} = (deg f_{i,j}, e_i). Shifted grading
/// (equigenerated ideals only): deg T_{i,j} = (0, e_i).
struct ReesSetup {
  RingPtr base;
  std::vector<std::vector<Polynomial>> ideals;
  bool shifted = false;

  RingPtr ring;
  RingPtr fiber;
  GroupPtr group;
  std::vector<std::vector<std::size_t>> t_vars;  // ring index of T_{i,j}
  StrandLayout layout;
  std::vector<int> to_fiber;  // ring var -> fiber var, -1 for S variables

  std::size_t blocks() const { return ideals.size(); }
  std::size_t num_t() const;
  /// Degree of x^0 in G x Z^s with Z^s-part t.
  Degree lift(const Degree& g, const std::vector<std::int64_t>& t) const;
  /// gamma_i of an equigenerated ideal.
  Degree generator_degree(std::size_t i) const;
};

/// Throws NotEquigenerated if `shifted` is requested for an ideal with mixed generator degrees.
ReesSetup make_rees_setup(const RingPtr& base, std::vector<std::vector<Polynomial>> ideals, bool shifted = false);

bool is_equigenerated(const std::vector<Polynomial>& gens);

/// Kernel of S[T] -> S[u], T_{i,j} -> f_{i,j} u_i.
std::vector<Polynomial> rees_ideal(const ReesSetup& setup);

/// Presentation of M R = (+)_t M I^t T^t over setup.ring; generators sit in Z^s-degree 0.
Presentation rees_module_presentation(const Presentation& M, const ReesSetup& setup);

/// Products of generators with t_i factors from I_i (redundant set, no minimality claimed).
std::vector<Polynomial> power_ideal(const ReesSetup& setup, const std::vector<std::int64_t>& t);

/// beta_{i,eta}(M I^t) for i <= max_i, by direct resolution.
BettiTable power_tor(const Presentation& M, const ReesSetup& setup, const std::vector<std::int64_t>& t,
                     std::size_t max_i);

/// Presentation of M I^t as a module over S.
Presentation power_module(const Presentation& M, const ReesSetup& setup, const std::vector<std::int64_t>& t);

}  // namespace basym

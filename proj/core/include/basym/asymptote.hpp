#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "basym/rees.hpp"
#include "basym/stanley.hpp"

namespace basym {

// ------------------------------------------------------------------ tameness

enum class Eventually { Zero, Nonzero };

struct Positivity {
  Eventually kind = Eventually::Zero;
  /// The pattern t -> (M_t != 0) is constant on t0 + N^s.
  std::vector<std::int64_t> t0;
};

/// Reads the Z^s-projection of a support decomposition over a ring graded by
/// base x Z^s whose variables have Z^s-degree some e_i.
///
/// A component whose generators miss block i only meets the slice
/// t_i = t_{p,i}; finitely many such slices cannot contain a translated
/// orthant, so M is eventually nonzero iff one component covers every block.
Positivity eventual_positivity(const SupportDecomposition& d, const GroupPtr& base, std::size_t blocks);
Positivity eventual_positivity(const Presentation& p, const GroupPtr& base, std::size_t blocks);

/// Sub-presentation on the generators whose base part is eta. Needs ring
/// variables of base degree zero (the shifted Rees grading).
Presentation base_strand(const Presentation& p, const GroupPtr& base, const Degree& eta);

// --------------------------------------------------------------- polynomials

struct FittedPolynomial {
  std::size_t vars = 0;
  std::vector<std::vector<int>> exponents;
  std::vector<Rational> coefficients;
  /// Agreement with the sampled function was checked from here on.
  std::vector<std::int64_t> valid_from;

  Rational operator()(const std::vector<std::int64_t>& t) const;
  /// "2*t + 1", "t1*t2 - 3"; zero prints as "0".
  std::string to_string() const;
};

using LatticeFunction = std::function<std::int64_t(const std::vector<std::int64_t>&)>;

/// Exact interpolation of total degree <= degree on the simplex grid above t0,
/// checked on three held-out points per coordinate direction (plus the
/// diagonal when vars > 1). Moves t0 up by one on mismatch; FitFailure after
/// `retries` moves.
FittedPolynomial fit_polynomial(const LatticeFunction& f, std::size_t vars, std::size_t degree,
                                std::vector<std::int64_t> t0, int retries = 4);

// ------------------------------------------------------------------ pipeline

struct ShapeComponent {
  Degree delta;
  std::vector<std::int64_t> t0;
  /// blocks[i]: base degrees of the block-i variables of the component.
  std::vector<std::vector<Degree>> blocks;
};

struct AsymptoticShape {
  std::size_t ell = 0;
  GroupPtr base;
  PositivityFunctional phi;
  std::vector<std::int64_t> threshold;
  std::vector<ShapeComponent> components;

  bool contains(const Degree& gamma, const std::vector<std::int64_t>& t) const;
  /// Degrees of phi-weight at most wcap predicted at t.
  std::set<Degree> support(const std::vector<std::int64_t>& t, const Rational& wcap) const;
};

/// Rees module of M, its minimal resolution over S[T] and the complex over
/// k[T] obtained by setting the S variables to zero.
class TorPipeline {
 public:
  TorPipeline(const Presentation& M, ReesSetup setup, std::size_t max_ell);

  const ReesSetup& setup() const { return setup_; }
  const Presentation& rees_module() const { return rees_; }
  const GradedComplex& resolution() const { return resolution_; }
  const GradedComplex& fiber_complex() const { return fiber_; }
  std::size_t max_ell() const { return max_ell_; }

  /// Tor_ell^R(M R, k[T]) as a k[T]-module; its (gamma, t) piece is Tor_ell(M I^t)_gamma.
  const Presentation& homology(std::size_t ell) const;
  const SupportDecomposition& homology_support(std::size_t ell) const;
  /// Components with an empty block are dropped and pushed into the threshold.
  AsymptoticShape shape(std::size_t ell) const;
  /// Every component, empty blocks included; exact for all t >= 0.
  AsymptoticShape raw_shape(std::size_t ell) const;

 private:
  void check(std::size_t ell) const;

  ReesSetup setup_;
  std::size_t max_ell_;
  Presentation rees_;
  GradedComplex resolution_;
  GradedComplex fiber_;
  std::vector<Presentation> homology_;
  std::vector<SupportDecomposition> support_;
};

// --------------------------------------------------------- equigenerated case

struct StrandReport {
  Positivity positivity;
  FittedPolynomial polynomial;
};

struct EquigeneratedReport {
  std::vector<Degree> gamma;
  /// Indexed by homological degree i = 0..max_i.
  std::vector<std::set<Degree>> delta;
  std::vector<std::set<Degree>> delta_prime;
  std::vector<std::map<Degree, StrandReport>> strands;

  /// Degree of Tor_i(M I^t) for base part eta: eta + sum t_j gamma_j.
  Degree place(const Degree& eta, const std::vector<std::int64_t>& t) const;
};

/// Requires a shifted setup (NotEquigenerated otherwise).
EquigeneratedReport equigenerated_bounds(const TorPipeline& pipeline, std::size_t max_i);

}  // namespace basym

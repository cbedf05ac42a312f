#pragma once

#include <cstdint>
#include <vector>

#include "basym/homalg.hpp"

namespace basym {

/// u * k[Z] with u a monomial at position u.comp.
struct StanleySummand {
  Term u;
  Degree degree;
  std::vector<std::size_t> vars;
};

struct StanleyDecomposition {
  ModulePtr module;
  std::vector<StanleySummand> summands;

  /// Number of monomials of degree gamma across all summands.
  std::size_t count(const Degree& gamma) const;
};

/// Standard monomials of F / (monomial_gens), split by lowest-index variable.
StanleyDecomposition stanley_decomposition(const ModulePtr& F, const std::vector<Term>& monomial_gens);
StanleyDecomposition stanley_decomposition(const RingPtr& ring, const std::vector<Monomial>& monomial_gens);

/// Gröbner basis of the ideal of k[vars] spanned by T^a - T^b with deg T^a = deg T^b.
std::vector<Polynomial> toric_degree_ideal(const RingPtr& ring);

struct SupportComponent {
  Degree shift;
  std::vector<Degree> generators;

  friend bool operator==(const SupportComponent&, const SupportComponent&) = default;
};

struct SupportDecomposition {
  GroupPtr group;
  PositivityFunctional phi;
  std::vector<SupportComponent> components;

  /// Degrees of phi-weight (scaled) at most max_weight covered by some component.
  std::vector<Degree> enumerate(std::int64_t max_weight) const;
};

/// supp(coker p) as a union of shifted free monoids generated by variable degrees.
SupportDecomposition module_support_decomposition(const Presentation& p);

/// target in <gens> (gens free-independent).
bool in_monoid(const Degree& target, const std::vector<Degree>& gens);

bool support_membership(const SupportDecomposition& d, const Degree& gamma);

}  // namespace basym

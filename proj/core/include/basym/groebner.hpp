#pragma once

#include <vector>

#include "basym/poly.hpp"

namespace basym {

/// Gröbner basis of a submodule; the order is the one carried by `module`.
struct GroebnerBasis {
  ModulePtr module;
  /// Monic, sorted ascending by lead term.
  std::vector<Vector> generators;
  bool reduced = true;
  /// Reduced images of the input generators that are needed to generate
  /// (meaningful for homogeneous input only); input order preserved.
  std::vector<Vector> minimal_generators;

  std::vector<Term> leads() const;
};

struct BuchbergerOptions {
  bool reduce = true;
  /// Rejects inhomogeneous input with ErrorKind::Inhomogeneous.
  bool require_homogeneous = true;
};

/// Division remainder of v by basis: no term of the result is divisible by a
/// lead term of basis (full reduction).
Vector normal_form(const Vector& v, const std::vector<Vector>& basis);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

GroebnerBasis buchberger(const std::vector<Vector>& gens, const BuchbergerOptions& options = {});

/// Ideal convenience wrapper: polynomials viewed in the rank-one module of their ring.
std::vector<Polynomial> groebner_ideal(const std::vector<Polynomial>& gens, bool require_homogeneous = true);

/// Lead terms (coefficient 1) of a Gröbner basis of the submodule.
std::vector<Vector> initial_submodule(const std::vector<Vector>& gens);

/// Minimal homogeneous generators of the submodule spanned by gens.
std::vector<Vector> minimal_generators(const std::vector<Vector>& gens);

/// Free module with one basis element per generator, shifted by the generator degrees.
ModulePtr syzygy_source(const ModulePtr& ambient, const std::vector<Vector>& gens);

/// Minimal generators of the syzygy module of gens, living in `source`
/// (use syzygy_source to build it).
std::vector<Vector> syzygy_basis(const std::vector<Vector>& gens, const ModulePtr& source);
std::vector<Vector> syzygy_basis(const std::vector<Vector>& gens);

/// Generators of (ideal) ∩ k[variables outside block].
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<bool>& block);

/// Submodule version: generators of (submodule) ∩ (free module over k[variables outside block]).
std::vector<Vector> eliminate(const std::vector<Vector>& gens, const std::vector<bool>& block);

/// Krull dimension of S/(gens), read off the initial ideal: the largest set of
/// variables carrying no lead monomial.
std::size_t krull_dimension(const std::vector<Polynomial>& gens);

/// Homogeneous gens of codimension equal to their number.
bool is_complete_intersection(const std::vector<Polynomial>& gens);

/// v lies in the submodule with Gröbner basis gb.
bool reduces_to_zero(const Vector& v, const GroebnerBasis& gb);

}  // namespace basym

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "basym/groebner.hpp"

namespace basym {

/// coker(relations -> generators): the graded module F0 / <relations>.
struct Presentation {
  ModulePtr generators;
  std::vector<Vector> relations;

  const RingPtr& ring() const { return generators->ring(); }
};

/// The ring itself, S(0)/0.
Presentation free_presentation(const ModulePtr& F);
/// S / (gens).
Presentation cyclic_presentation(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Presentation of the submodule of coker(M) generated by the images of gens (elements of M.generators).
Presentation image_presentation(const Presentation& M, const std::vector<Vector>& gens);

/// Degree-zero map source -> target, column j = image of basis element j.
struct GradedMap {
  ModulePtr source;
  ModulePtr target;
  std::vector<Vector> columns;

  Vector apply(const Vector& v) const;
  bool is_degree_zero() const;
};

/// Generators of ker(m) inside m.source (zero columns contribute basis vectors).
std::vector<Vector> kernel(const GradedMap& m);

/// F_0 <- F_1 <- ... <- F_n; maps[i-1] is d_i : F_i -> F_{i-1}.
struct GradedComplex {
  std::vector<ModulePtr> modules;
  std::vector<GradedMap> maps;

  std::size_t length() const { return maps.size(); }
  const GradedMap& d(std::size_t i) const { return maps.at(i - 1); }
  const RingPtr& ring() const { return modules.front()->ring(); }

  /// d_i ∘ d_{i+1} = 0 for every i, checked exactly.
  bool composes_to_zero() const;
  /// No differential entry has a nonzero constant term.
  bool is_minimal() const;
};

/// Multiplicities beta_{i,eta}.
class BettiTable {
 public:
  void add(std::size_t i, const Degree& eta, std::size_t count = 1);

  std::size_t multiplicity(std::size_t i, const Degree& eta) const;
  std::set<Degree> support(std::size_t i) const;
  std::size_t max_index() const { return rows_.empty() ? 0 : rows_.rbegin()->first; }
  bool empty() const { return rows_.empty(); }
  const std::map<std::size_t, std::map<Degree, std::size_t>>& rows() const { return rows_; }

  struct Entry {
    std::size_t i;
    Degree degree;
    std::size_t multiplicity;
  };
  /// Sorted by (i, phi-weight, lexicographic degree).
  std::vector<Entry> ordered(const PositivityFunctional& phi) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::size_t, std::map<Degree, std::size_t>> rows_;
};

/// Schreyer resolution of the presented module, minimalized. The result has
/// F_0..F_length; F_0..F_length are minimal (one extra level is computed and
/// dropped). Lengths beyond nvars + 1 raise ErrorKind::ResolutionLength.
GradedComplex free_resolution(const Presentation& p, std::size_t length);

/// Cancels unit entries until none remain.
GradedComplex minimalize(const GradedComplex& c);

/// Betti table of a minimal complex: shifts of F_0..F_n.
BettiTable betti_table(const GradedComplex& minimal);

/// beta_{i,eta} for i <= max_i (zero past nvars, so any max_i is accepted).
BettiTable tor_table(const Presentation& p, std::size_t max_i);

/// Substitutes zero for every variable with var_map[v] < 0 and renames the
/// rest into `target` (same degree group); shifts are kept.
GradedComplex specialize(const GradedComplex& c, const RingPtr& target, const std::vector<int>& var_map);
Presentation specialize(const Presentation& p, const RingPtr& target, const std::vector<int>& var_map);
Vector specialize(const Vector& v, const ModulePtr& target, const std::vector<int>& var_map);

/// Presentation of H_i(c) = ker d_i / im d_{i+1}.
Presentation subquotient_presentation(const GradedComplex& c, std::size_t i);

/// How a ring over S[T] splits: S-variable indices, and per T-variable its
/// block (Z^s coordinate) and its index in the ambient ring.
struct StrandLayout {
  RingPtr base;                          // S, graded by G
  std::vector<int> base_index;           // ambient var -> S var, or -1
  std::vector<int> block_of;             // ambient var -> block (T vars) or -1
  std::size_t blocks = 0;
};

/// The (*,t)-strand of a complex over S[T] graded by G x Z^s, as a complex over S.
GradedComplex strand(const GradedComplex& c, const StrandLayout& layout, const std::vector<std::int64_t>& t);

/// Dimension counter for a presented module via standard monomials of the initial submodule.
class HilbertFunction {
 public:
  explicit HilbertFunction(const Presentation& p);
  std::size_t operator()(const Degree& gamma) const;
  const GroebnerBasis& basis() const { return gb_; }

 private:
  ModulePtr F_;
  GroebnerBasis gb_;
  std::vector<std::vector<Monomial>> leads_;
};

std::map<Degree, std::size_t> hilbert_window(const Presentation& p, const std::vector<Degree>& degrees);

}  // namespace basym

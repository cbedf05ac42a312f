#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "basym/field.hpp"
#include "basym/grading.hpp"
#include "basym/ring.hpp"

namespace basym {

/// c * x^m * e_comp. Polynomials use comp == 0.
struct Term {
  Monomial m;
  std::uint32_t comp = 0;
  Coeff c = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class PositionRule { TermOverPosition, PositionOverTerm };

/// Induced (Schreyer) order data: basis element i compares as total[i] with
/// ties broken by the index chain tie[i] (lexicographically smaller wins).
struct SchreyerData {
  std::vector<Monomial> total;
  std::vector<std::vector<std::uint32_t>> tie;

  friend bool operator==(const SchreyerData&, const SchreyerData&) = default;
};

class FreeModule;
using ModulePtr = std::shared_ptr<const FreeModule>;

/// Graded free module  (+)_i S(-shift_i)  with a module monomial order.
///
/// Standard orders put basis priority e_0 > e_1 > ...; with a nonzero
/// dominant prefix k every term in a component < k is larger than every term
/// in a component >= k (used to eliminate the first k components).
class FreeModule {
 public:
  FreeModule(RingPtr ring, std::vector<Degree> shifts, PositionRule rule = PositionRule::TermOverPosition,
             std::size_t dominant_prefix = 0);
  FreeModule(RingPtr ring, std::vector<Degree> shifts, SchreyerData schreyer);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<Degree>& shifts() const { return shifts_; }
  PositionRule rule() const { return rule_; }
  std::size_t dominant_prefix() const { return dominant_; }
  bool is_schreyer() const { return is_schreyer_; }
  const SchreyerData& schreyer() const { return schreyer_; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  int compare(const Term& a, const Term& b) const { return compare(a.m, a.comp, b.m, b.comp); }

  Degree degree(const Monomial& m, std::uint32_t comp) const;
  std::int64_t weight(const Monomial& m, std::uint32_t comp) const { return ring_->weight(m) + shift_weights_[comp]; }
  std::int64_t shift_weight(std::size_t i) const { return shift_weights_[i]; }

  bool same_as(const FreeModule& o) const;

 private:
  RingPtr ring_;
  std::vector<Degree> shifts_;
  std::vector<std::int64_t> shift_weights_;
  PositionRule rule_ = PositionRule::TermOverPosition;
  std::size_t dominant_ = 0;
  SchreyerData schreyer_;
  bool is_schreyer_ = false;
};

ModulePtr make_free_module(RingPtr ring, std::vector<Degree> shifts,
                           PositionRule rule = PositionRule::TermOverPosition, std::size_t dominant_prefix = 0);
/// Rank-one module S(0): the ambient of ideals.
ModulePtr ring_as_module(const RingPtr& ring);

void require_same_module(const FreeModule& a, const FreeModule& b);

class Polynomial;

/// Element of a graded free module; terms kept sorted descending in the
/// module order, no zero coefficients, no repeated monomial-with-position.
class Vector {
 public:
  Vector() = default;
  explicit Vector(ModulePtr module) : module_(std::move(module)) {}
  /// Canonicalizes arbitrary input terms (sort, combine, drop zeros).
  Vector(ModulePtr module, std::vector<Term> terms);

  static Vector basis(const ModulePtr& module, std::size_t i);
  /// Terms already sorted descending with distinct positions and nonzero coefficients.
  static Vector from_sorted(ModulePtr module, std::vector<Term> terms);

  const ModulePtr& module() const { return module_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  Vector scaled(Coeff c) const;
  Vector mul_term(const Monomial& m, Coeff c) const;
  /// this + c * m * g
  Vector axpy(Coeff c, const Monomial& m, const Vector& g) const;
  Vector monic() const;

  /// Coefficient polynomial of basis element i.
  Polynomial component(std::size_t i) const;
  std::vector<Polynomial> components() const;

  /// Same terms reinterpreted in another free module with the same ring and rank.
  Vector reembed(const ModulePtr& target) const;
  /// Identity when target is already the ambient pointer, else reembed.
  Vector reembed_if_needed(const ModulePtr& target) const;

  bool is_homogeneous() const;
  /// Throws UndefinedDegree on zero, Inhomogeneous with two witness terms otherwise.
  Degree homogeneous_degree() const;

  friend bool operator==(const Vector& a, const Vector& b);

  /// "[x^2, -y, 0]" style row of component polynomials.
  std::string to_string() const;

 private:
  ModulePtr module_;
  std::vector<Term> terms_;
};

/// Element of a polynomial ring; terms sorted descending in the ring order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(const RingPtr& ring, std::int64_t c);
  static Polynomial variable(const RingPtr& ring, std::size_t i);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, Coeff c = 1);
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  /// Coefficient of the monomial 1.
  Coeff constant_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  Vector as_vector(const ModulePtr& module, std::size_t comp = 0) const;

  bool is_homogeneous() const;
  Degree homogeneous_degree() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Descending order, e.g. "3*x^2*y - z".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Vector operator*(const Polynomial& p, const Vector& v);

/// Ring homomorphism: variable i of p's ring goes to images[i] (all in one target ring).
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

/// Every monomial of degree gamma, enumerated by phi-weight; sorted descending.
std::vector<Monomial> monomials_of_degree(const Ring& ring, const Degree& gamma);

/// Monomials of phi-weight (scaled) at most `max_weight`, sorted ascending by weight.
std::vector<Monomial> monomials_up_to_weight(const Ring& ring, std::int64_t max_weight);

/// Parses "3*x^2*y - z", "(x+y)^2", integer constants; throws ErrorKind::Syntax.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace basym

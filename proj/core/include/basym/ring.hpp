#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "basym/field.hpp"
#include "basym/grading.hpp"

namespace basym {

inline constexpr std::size_t kMaxVars = 16;
using Exponent = std::int32_t;

/// Dense exponent vector; slots past the ring's variable count stay zero.
struct Monomial {
  std::array<Exponent, kMaxVars> e{};

  friend bool operator==(const Monomial&, const Monomial&) = default;

  bool is_one() const;
  Exponent total() const;
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o) to be false for no slot; callers check first.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { Grevlex, Lex, Elimination };

/// Ring monomial order. Grevlex refines the phi-weighted degree; Elimination
/// compares the block variables first (weighted grevlex on the block), then
/// weighted grevlex on the remaining variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<bool> block;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
  static MonomialOrder elimination(std::vector<bool> block) { return {OrderKind::Elimination, std::move(block)}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring k[x_1..x_n] graded by a DegreeGroup.
class Ring {
 public:
  /// Throws ErrorKind::Positivity unless phi is positive on every variable degree.
  Ring(PrimeField field, std::vector<std::string> names, std::vector<Degree> degrees, PositivityFunctional phi,
       MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const GroupPtr& group() const { return group_; }
  const std::vector<Degree>& var_degrees() const { return degrees_; }
  const PositivityFunctional& phi() const { return phi_; }
  const MonomialOrder& order() const { return order_; }
  std::int64_t var_weight(std::size_t i) const { return weights_[i]; }

  /// Index of a variable by name, or -1.
  int index_of(const std::string& name) const;

  /// -1, 0, 1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  std::int64_t weight(const Monomial& m) const;
  Degree degree(const Monomial& m) const;
  Monomial variable(std::size_t i, Exponent power = 1) const;
  std::string format(const Monomial& m) const;

  RingPtr with_order(MonomialOrder order) const;

  bool same_as(const Ring& o) const;

 private:
  int grevlex(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool in_mask) const;

  PrimeField field_;
  std::vector<std::string> names_;
  GroupPtr group_;
  std::vector<Degree> degrees_;
  PositivityFunctional phi_;
  MonomialOrder order_;
  std::vector<std::int64_t> weights_;
};

RingPtr make_ring(PrimeField field, std::vector<std::string> names, std::vector<Degree> degrees,
                  PositivityFunctional phi, MonomialOrder order = MonomialOrder::grevlex());

void require_same_ring(const Ring& a, const Ring& b);

}  // namespace basym

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "basym/rational.hpp"

namespace basym {

/// Descriptor of G = Z^d + Z/m_1 + ... + Z/m_q.
class DegreeGroup {
 public:
  DegreeGroup(int free_rank, std::vector<std::int64_t> torsion_moduli);

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::size_t size() const { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }

  friend bool operator==(const DegreeGroup&, const DegreeGroup&) = default;

  /// "Z^2 + Z/3"
  std::string to_string() const;

 private:
  int free_rank_;
  std::vector<std::int64_t> torsion_;
};

using GroupPtr = std::shared_ptr<const DegreeGroup>;

GroupPtr make_group(int free_rank, std::vector<std::int64_t> torsion_moduli = {});

/// G x Z^s: the s extra free coordinates are appended after the free part of G.
GroupPtr product_with_free(const GroupPtr& g, int s);

/// Element of a DegreeGroup; coordinates are the free part followed by the
/// torsion part, torsion entries kept in [0, m_j).
class Degree {
 public:
  Degree() = default;
  Degree(GroupPtr group, std::vector<std::int64_t> coords);

  static Degree zero(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::span<const std::int64_t> free_part() const;
  std::span<const std::int64_t> torsion_part() const;
  bool is_zero() const;

  Degree operator+(const Degree& o) const;
  Degree operator-(const Degree& o) const;
  Degree operator-() const;
  Degree operator*(std::int64_t k) const;
  Degree& operator+=(const Degree& o) { return *this = *this + o; }

  friend bool operator==(const Degree& a, const Degree& b);
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);

  /// "7" for a rank-one free group, "(2,1)" otherwise.
  std::string to_string() const;

 private:
  GroupPtr group_;
  std::vector<std::int64_t> coords_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);
void require_same_group(const GroupPtr& a, const GroupPtr& b);

/// Splitting of degrees in product_with_free(base, s).
Degree base_part(const Degree& d, const GroupPtr& base);
std::vector<std::int64_t> extra_part(const Degree& d, const GroupPtr& base);
Degree join_degree(const Degree& g, std::span<const std::int64_t> t, const GroupPtr& product);

/// Linear functional on the free part of G with rational weights, stored as
/// integer numerators over one positive common denominator.
class PositivityFunctional {
 public:
  PositivityFunctional() = default;
  explicit PositivityFunctional(std::vector<Rational> weights);

  static PositivityFunctional all_ones(int free_rank);

  std::vector<Rational> weights() const;
  std::size_t size() const { return numerators_.size(); }

  Rational operator()(const Degree& d) const;
  /// Value times the common denominator; same sign as the value, exact integer.
  std::int64_t scaled(const Degree& d) const;

  /// Extends a functional on G to G x Z^s with weight `extra` on each new coordinate.
  PositivityFunctional extended(int s, const Rational& extra) const;

  friend bool operator==(const PositivityFunctional&, const PositivityFunctional&) = default;

 private:
  std::vector<std::int64_t> numerators_;
  std::int64_t denominator_ = 1;
};

/// Integer relations among `degrees`: a basis (Hermite form) of
/// {a in Z^k : sum a_i degrees_i = 0 in G}.
std::vector<std::vector<std::int64_t>> relation_lattice(std::span<const Degree> degrees);

/// True iff the degrees form a basis of a free submonoid of G.
bool is_free_independent(std::span<const Degree> degrees);

/// (nu_2 - nu_1, ..., nu_s - nu_{s-1}); empty when fewer than two entries.
std::vector<Degree> delta_tuple(std::span<const Degree> degrees);

bool check_positivity(const PositivityFunctional& phi, std::span<const Degree> degrees);

}  // namespace basym

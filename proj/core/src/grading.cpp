#include "basym/grading.hpp"

#include <algorithm>
#include <numeric>

#include "basym/checked.hpp"
#include "basym/error.hpp"
#include "basym/intmat.hpp"

namespace basym {

DegreeGroup::DegreeGroup(int free_rank, std::vector<std::int64_t> torsion_moduli)
    : free_rank_(free_rank), torsion_(std::move(torsion_moduli)) {
  if (free_rank_ < 0) fail(ErrorKind::InvalidArgument, "negative free rank");
  for (auto m : torsion_)
    if (m < 2) fail(ErrorKind::InvalidArgument, "torsion modulus must be >= 2, got " + std::to_string(m));
}

std::string DegreeGroup::to_string() const {
  std::string s = "Z^" + std::to_string(free_rank_);
  for (auto m : torsion_) s += " + Z/" + std::to_string(m);
  return s;
}

GroupPtr make_group(int free_rank, std::vector<std::int64_t> torsion_moduli) {
  return std::make_shared<const DegreeGroup>(free_rank, std::move(torsion_moduli));
}

GroupPtr product_with_free(const GroupPtr& g, int s) { return make_group(g->free_rank() + s, g->torsion()); }

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (!same_group(a, b))
    fail(ErrorKind::DescriptorMismatch,
         "degrees from different groups: " + (a ? a->to_string() : std::string("<none>")) + " vs " +
             (b ? b->to_string() : std::string("<none>")));
}

Degree::Degree(GroupPtr group, std::vector<std::int64_t> coords) : group_(std::move(group)), coords_(std::move(coords)) {
  if (!group_) fail(ErrorKind::InvalidArgument, "degree without group");
  if (coords_.size() != group_->size())
    fail(ErrorKind::InvalidArgument, "degree has " + std::to_string(coords_.size()) + " coordinates, group " +
                                         group_->to_string() + " needs " + std::to_string(group_->size()));
  const std::size_t d = static_cast<std::size_t>(group_->free_rank());
  for (std::size_t j = 0; j < group_->torsion().size(); ++j)
    coords_[d + j] = floor_mod(coords_[d + j], group_->torsion()[j]);
}

Degree Degree::zero(const GroupPtr& group) { return Degree(group, std::vector<std::int64_t>(group->size(), 0)); }

std::span<const std::int64_t> Degree::free_part() const {
  return std::span<const std::int64_t>(coords_).first(static_cast<std::size_t>(group_->free_rank()));
}

std::span<const std::int64_t> Degree::torsion_part() const {
  return std::span<const std::int64_t>(coords_).subspan(static_cast<std::size_t>(group_->free_rank()));
}

bool Degree::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t v) { return v == 0; });
}

Degree Degree::operator+(const Degree& o) const {
  require_same_group(group_, o.group_);
  std::vector<std::int64_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(coords_[i], o.coords_[i]);
  return Degree(group_, std::move(c));
}

Degree Degree::operator-(const Degree& o) const { return *this + (-o); }

Degree Degree::operator-() const { return *this * -1; }

Degree Degree::operator*(std::int64_t k) const {
  std::vector<std::int64_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(coords_[i], k);
  return Degree(group_, std::move(c));
}

bool operator==(const Degree& a, const Degree& b) {
  require_same_group(a.group_, b.group_);
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
  require_same_group(a.group_, b.group_);
  return a.coords_ <=> b.coords_;
}

std::string Degree::to_string() const {
  if (coords_.size() == 1) return std::to_string(coords_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

Degree base_part(const Degree& d, const GroupPtr& base) {
  const std::size_t fb = static_cast<std::size_t>(base->free_rank());
  const std::size_t fd = static_cast<std::size_t>(d.group()->free_rank());
  std::vector<std::int64_t> c(d.coords().begin(), d.coords().begin() + static_cast<std::ptrdiff_t>(fb));
  c.insert(c.end(), d.coords().begin() + static_cast<std::ptrdiff_t>(fd), d.coords().end());
  return Degree(base, std::move(c));
}

std::vector<std::int64_t> extra_part(const Degree& d, const GroupPtr& base) {
  const std::size_t fb = static_cast<std::size_t>(base->free_rank());
  const std::size_t fd = static_cast<std::size_t>(d.group()->free_rank());
  return std::vector<std::int64_t>(d.coords().begin() + static_cast<std::ptrdiff_t>(fb),
                                   d.coords().begin() + static_cast<std::ptrdiff_t>(fd));
}

Degree join_degree(const Degree& g, std::span<const std::int64_t> t, const GroupPtr& product) {
  auto f = g.free_part();
  auto tor = g.torsion_part();
  std::vector<std::int64_t> c(f.begin(), f.end());
  c.insert(c.end(), t.begin(), t.end());
  c.insert(c.end(), tor.begin(), tor.end());
  return Degree(product, std::move(c));
}

PositivityFunctional::PositivityFunctional(std::vector<Rational> weights) {
  std::int64_t den = 1;
  for (const auto& w : weights) den = checked_mul(den / std::gcd(den, w.den()), w.den());
  denominator_ = den;
  numerators_.reserve(weights.size());
  for (const auto& w : weights) numerators_.push_back(checked_mul(w.num(), den / w.den()));
}

PositivityFunctional PositivityFunctional::all_ones(int free_rank) {
  return PositivityFunctional(std::vector<Rational>(static_cast<std::size_t>(free_rank), Rational(1)));
}

std::vector<Rational> PositivityFunctional::weights() const {
  std::vector<Rational> w;
  for (auto n : numerators_) w.emplace_back(n, denominator_);
  return w;
}

std::int64_t PositivityFunctional::scaled(const Degree& d) const {
  auto f = d.free_part();
  if (f.size() != numerators_.size())
    fail(ErrorKind::DescriptorMismatch, "positivity functional has " + std::to_string(numerators_.size()) +
                                            " weights, degree has free rank " + std::to_string(f.size()));
  std::int64_t v = 0;
  for (std::size_t i = 0; i < f.size(); ++i) v = checked_add(v, checked_mul(numerators_[i], f[i]));
  return v;
}

Rational PositivityFunctional::operator()(const Degree& d) const { return Rational(scaled(d), denominator_); }

PositivityFunctional PositivityFunctional::extended(int s, const Rational& extra) const {
  auto w = weights();
  for (int i = 0; i < s; ++i) w.push_back(extra);
  return PositivityFunctional(std::move(w));
}

std::vector<std::vector<std::int64_t>> relation_lattice(std::span<const Degree> degrees) {
  const std::size_t k = degrees.size();
  if (k == 0) return {};
  const GroupPtr& g = degrees[0].group();
  for (const auto& d : degrees) require_same_group(g, d.group());
  const std::size_t d = static_cast<std::size_t>(g->free_rank());
  const std::size_t q = g->torsion().size();

  // columns: one per degree, then one modulus column per torsion factor
  IntMatrix a(d + q, k + q);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d + q; ++i) a(i, j) = degrees[j].coords()[i];
  for (std::size_t t = 0; t < q; ++t) a(d + t, k + t) = g->torsion()[t];

  std::vector<std::vector<std::int64_t>> projected;
  for (auto& v : integer_kernel(a)) {
    v.resize(k);
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) projected.push_back(std::move(v));
  }
  if (projected.empty()) return {};
  return hermite_basis(projected, k);
}

bool is_free_independent(std::span<const Degree> degrees) { return relation_lattice(degrees).empty(); }

std::vector<Degree> delta_tuple(std::span<const Degree> degrees) {
  std::vector<Degree> out;
  for (std::size_t i = 1; i < degrees.size(); ++i) out.push_back(degrees[i] - degrees[i - 1]);
  return out;
}

bool check_positivity(const PositivityFunctional& phi, std::span<const Degree> degrees) {
  return std::all_of(degrees.begin(), degrees.end(), [&](const Degree& d) { return phi.scaled(d) > 0; });
}

}  // namespace basym

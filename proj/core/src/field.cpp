#include "basym/field.hpp"

#include "basym/error.hpp"

namespace basym {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) fail(ErrorKind::InvalidArgument, "field characteristic must be a prime < 2^31, got " + std::to_string(p));
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) fail(ErrorKind::InvalidArgument, "inverse of zero in Z/" + std::to_string(p_));
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

void FieldScalar::require_same(const FieldScalar& o) const {
  if (!(field_ == o.field_)) fail(ErrorKind::AmbientMismatch, "scalars from different prime fields");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  require_same(o);
  return FieldScalar(field_, field_.add(value_, o.value_), true);
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  require_same(o);
  return FieldScalar(field_, field_.sub(value_, o.value_), true);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_same(o);
  return FieldScalar(field_, field_.mul(value_, o.value_), true);
}

FieldScalar FieldScalar::inverse() const { return FieldScalar(field_, field_.inv(value_), true); }

}  // namespace basym

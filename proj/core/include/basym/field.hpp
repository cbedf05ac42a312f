#pragma once

#include <cstdint>
#include <string>

namespace basym {

using Coeff = std::uint32_t;

/// Arithmetic in Z/p for a prime p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff from_int(std::int64_t v) const;
  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const { return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// A value of Z/p carried together with its characteristic.
class FieldScalar {
 public:
  FieldScalar(const PrimeField& field, std::int64_t v) : field_(field), value_(field.from_int(v)) {}

  Coeff value() const { return value_; }
  const PrimeField& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar inverse() const;
  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  FieldScalar(const PrimeField& field, Coeff v, bool) : field_(field), value_(v) {}
  void require_same(const FieldScalar& o) const;

  PrimeField field_;
  Coeff value_;
};

}  // namespace basym

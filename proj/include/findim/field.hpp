#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace findim {

using Scalar = mpq_class;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals, or the prime field F_p for p < 2^31.
/// Scalars are always stored as mpq values; over F_p they are kept reduced
/// to integers in [0, p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  /// "Q" or "Fp:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  void normalize(Scalar& a) const;
  Scalar from_int(long v) const;
  Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;

  Scalar add(const Scalar& a, const Scalar& b) const {
    Scalar r = a + b;
    if (p_) reduce_int(r);
    return r;
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    Scalar r = a - b;
    if (p_) reduce_int(r);
    return r;
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    Scalar r = a * b;
    if (p_) reduce_int(r);
    return r;
  }
  Scalar neg(const Scalar& a) const {
    Scalar r = -a;
    if (p_) reduce_int(r);
    return r;
  }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  void reduce_int(Scalar& a) const;

  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace findim

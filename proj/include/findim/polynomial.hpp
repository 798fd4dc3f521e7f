#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "findim/field.hpp"

namespace findim {

inline constexpr int kMaxVars = 12;

/// Exponent vector with its cached weighted degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int32_t deg = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp != b.exp; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  r.deg = a.deg + b.deg;
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

/// b / a, assuming divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
  r.deg = b.deg - a.deg;
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] && b.exp[i]) return false;
  return true;
}

/// Weighted graded reverse lexicographic comparison; returns -1, 0 or 1.
inline int compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

/// Ambient polynomial ring k[x_1..x_v] with positive integer variable weights.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights);

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int index_of(const std::string& name) const;

  Monomial one() const { return Monomial{}; }
  Monomial var(int i, int power = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  int weighted_degree(const Monomial& m) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Scalar coef;
  Monomial mono;
};

/// Sparse polynomial, terms strictly decreasing in the monomial order, no zero
/// coefficients.
using Poly = std::vector<Term>;

Poly poly_constant(const Field& k, const Scalar& c);
Poly poly_monomial(const Field& k, const Scalar& c, const Monomial& m);
Poly poly_add(const Field& k, const Poly& f, const Poly& g);
Poly poly_sub(const Field& k, const Poly& f, const Poly& g);
Poly poly_neg(const Field& k, const Poly& f);
Poly poly_scale(const Field& k, const Poly& f, const Scalar& c);
Poly poly_mul_term(const Field& k, const Poly& f, const Scalar& c, const Monomial& m);
Poly poly_mul(const Field& k, const Poly& f, const Poly& g);
/// f + c * m * g
void poly_axpy(const Field& k, Poly& f, const Scalar& c, const Monomial& m, const Poly& g);

inline bool is_zero(const Poly& f) { return f.empty(); }
bool is_homogeneous(const Poly& f);
/// Weighted degree of a homogeneous polynomial (leading term), or nullopt-like -1 for 0.
int leading_degree(const Poly& f);
bool is_constant(const Poly& f);
bool poly_equal(const Poly& f, const Poly& g);

/// Canonical text form in the serialization grammar.
std::string to_string(const PolyRing& ring, const Poly& f);
/// Parses `c*x1^a1*x2^a2` terms separated by +/-; coefficients are decimal
/// integers or n/d rationals.
Poly parse_poly(const PolyRing& ring, const std::string& text);

}  // namespace findim

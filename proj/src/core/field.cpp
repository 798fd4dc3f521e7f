#include "findim/field.hpp"

namespace findim {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InputError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ" || text == "0") return rationals();
  auto colon = text.find(':');
  if (text.rfind("Fp", 0) == 0 && colon != std::string::npos) {
    unsigned long p = 0;
    try {
      p = std::stoul(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("malformed field descriptor '" + text + "'");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InputError("unknown field descriptor '" + text + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const { return p_ ? "Fp:" + std::to_string(p_) : "Q"; }

void Field::reduce_int(Scalar& a) const {
  if (a.get_den() != 1) {
    mpz_class den = a.get_den();
    mpz_class inv;
    mpz_class mod(p_);
    mpz_class d = den % mod;
    if (d < 0) d += mod;
    if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
    mpz_class n = a.get_num() * inv;
    mpz_fdiv_r_ui(n.get_mpz_t(), n.get_mpz_t(), p_);
    a = Scalar(n);
    return;
  }
  mpz_class n = a.get_num();
  if (n >= 0 && n < p_) return;
  mpz_fdiv_r_ui(n.get_mpz_t(), n.get_mpz_t(), p_);
  a = Scalar(n);
}

void Field::normalize(Scalar& a) const {
  a.canonicalize();
  if (p_) reduce_int(a);
}

Scalar Field::from_int(long v) const {
  Scalar r(v);
  if (p_) reduce_int(r);
  return r;
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw std::domain_error("division by zero");
  Scalar r(num, den);
  normalize(r);
  return r;
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw std::domain_error("division by zero");
  if (!p_) return 1 / a;
  mpz_class n = a.get_num();
  mpz_class inv;
  mpz_class mod(p_);
  mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), mod.get_mpz_t());
  return Scalar(inv);
}

}  // namespace findim

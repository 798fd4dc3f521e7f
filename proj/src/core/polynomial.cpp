#include "findim/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace findim {

PolyRing::PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw InputError("variable names and degrees differ in length");
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (weights_[i] <= 0) throw InputError("variable '" + names_[i] + "' must have positive degree");
    if (names_[i].empty() || !std::isalpha(static_cast<unsigned char>(names_[i][0])))
      throw InputError("invalid variable name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i]) throw InputError("duplicate variable '" + names_[i] + "'");
  }
}

int PolyRing::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

Monomial PolyRing::var(int i, int power) const {
  Monomial m;
  m.exp[i] = static_cast<std::uint16_t>(power);
  m.deg = weights_[i] * power;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  r.deg = weighted_degree(r);
  return r;
}

int PolyRing::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < nvars(); ++i) d += weights_[i] * m.exp[i];
  return d;
}

Poly poly_constant(const Field& k, const Scalar& c) { return poly_monomial(k, c, Monomial{}); }

Poly poly_monomial(const Field& k, const Scalar& c, const Monomial& m) {
  Scalar v = c;
  k.normalize(v);
  if (v == 0) return {};
  return {Term{v, m}};
}

namespace {

template <class Combine>
Poly merge(const Field& k, const Poly& f, const Poly& g, Combine comb, bool negate_g) {
  Poly out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    int c = (i == f.size()) ? -1 : (j == g.size()) ? 1 : compare(f[i].mono, g[j].mono);
    if (c > 0) {
      out.push_back(f[i++]);
    } else if (c < 0) {
      out.push_back(negate_g ? Term{k.neg(g[j].coef), g[j].mono} : g[j]);
      ++j;
    } else {
      Scalar s = comb(f[i].coef, g[j].coef);
      if (s != 0) out.push_back(Term{s, f[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly poly_add(const Field& k, const Poly& f, const Poly& g) {
  return merge(k, f, g, [&](const Scalar& a, const Scalar& b) { return k.add(a, b); }, false);
}

Poly poly_sub(const Field& k, const Poly& f, const Poly& g) {
  return merge(k, f, g, [&](const Scalar& a, const Scalar& b) { return k.sub(a, b); }, true);
}

Poly poly_neg(const Field& k, const Poly& f) {
  Poly out = f;
  for (auto& t : out) t.coef = k.neg(t.coef);
  return out;
}

Poly poly_scale(const Field& k, const Poly& f, const Scalar& c) {
  if (c == 0) return {};
  Poly out = f;
  for (auto& t : out) t.coef = k.mul(t.coef, c);
  return out;
}

Poly poly_mul_term(const Field& k, const Poly& f, const Scalar& c, const Monomial& m) {
  if (c == 0) return {};
  Poly out;
  out.reserve(f.size());
  for (const auto& t : f) out.push_back(Term{k.mul(t.coef, c), t.mono * m});
  return out;
}

void poly_axpy(const Field& k, Poly& f, const Scalar& c, const Monomial& m, const Poly& g) {
  if (c == 0 || g.empty()) return;
  f = poly_add(k, f, poly_mul_term(k, g, c, m));
}

Poly poly_mul(const Field& k, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  std::vector<Term> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f)
    for (const auto& b : g) acc.push_back(Term{k.mul(a.coef, b.coef), a.mono * b.mono});
  std::sort(acc.begin(), acc.end(), [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  Poly out;
  for (auto& t : acc) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = k.add(out.back().coef, t.coef);
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool is_homogeneous(const Poly& f) {
  for (const auto& t : f)
    if (t.mono.deg != f.front().mono.deg) return false;
  return true;
}

int leading_degree(const Poly& f) { return f.empty() ? -1 : f.front().mono.deg; }

bool is_constant(const Poly& f) { return f.empty() || (f.size() == 1 && f[0].mono.deg == 0); }

bool poly_equal(const Poly& f, const Poly& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].mono != g[i].mono || f[i].coef != g[i].coef) return false;
  return true;
}

std::string to_string(const PolyRing& ring, const Poly& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f) {
    Scalar c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_mono = t.mono.deg > 0 || t.mono != Monomial{};
    bool wrote = false;
    if (c != 1 || !has_mono) {
      os << c.get_str();
      wrote = true;
    }
    for (int i = 0; i < ring.nvars(); ++i) {
      if (!t.mono.exp[i]) continue;
      if (wrote) os << "*";
      os << ring.names()[i];
      if (t.mono.exp[i] > 1) os << "^" << t.mono.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at column " + std::to_string(pos + 1) + " in '" + s + "': " + what);
  }
  mpz_class integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
      ++pos;
    if (start == pos) fail("expected variable name");
    return s.substr(start, pos - start);
  }
};

}  // namespace

Poly parse_poly(const PolyRing& ring, const std::string& text) {
  const Field& k = ring.field();
  Lexer lx{text};
  Poly result;
  if (lx.done()) lx.fail("empty input");
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++lx.pos;
    } else if (!first) {
      lx.fail("expected + or -");
    }
    first = false;
    Scalar coef = k.from_int(sign);
    Monomial mono;
    bool need_factor = true;
    while (need_factor) {
      char p = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        mpz_class num = lx.integer();
        mpz_class den = 1;
        if (lx.peek() == '/') {
          ++lx.pos;
          den = lx.integer();
          if (den == 0) lx.fail("zero denominator");
        }
        coef = k.mul(coef, k.from_ratio(num, den));
      } else if (std::isalpha(static_cast<unsigned char>(p))) {
        std::string name = lx.ident();
        int idx = ring.index_of(name);
        if (idx < 0) lx.fail("unknown variable '" + name + "'");
        long power = 1;
        if (lx.peek() == '^') {
          ++lx.pos;
          mpz_class e = lx.integer();
          if (e > 1000) lx.fail("exponent too large");
          power = e.get_si();
        }
        mono = mono * ring.var(idx, static_cast<int>(power));
      } else {
        lx.fail("expected coefficient or variable");
      }
      if (lx.peek() == '*') {
        ++lx.pos;
      } else {
        need_factor = false;
      }
    }
    result = poly_add(k, result, poly_monomial(k, coef, mono));
  }
  return result;
}

}  // namespace findim

#include "findim/graded_ring.hpp"

#include <algorithm>
#include <functional>

namespace findim {

namespace {

int leading_term_dimension(const PolyRing& ring, const std::vector<Poly>& gb) {
  int n = ring.nvars();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : gb) {
      const Monomial& lt = g.front().mono;
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (lt.exp[i] && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace

RingPtr GradedRing::make(PolyRingPtr poly, const std::vector<Poly>& relations) {
  std::shared_ptr<GradedRing> r(new GradedRing());
  r->poly_ = std::move(poly);
  for (const auto& f : relations) {
    if (!is_homogeneous(f)) throw InputError("relation " + to_string(*r->poly_, f) + " is not homogeneous");
    if (!f.empty()) r->relations_.push_back(f);
  }
  r->gb_ = ideal_groebner(*r->poly_, r->relations_);
  r->zero_ = !r->gb_.empty() && r->gb_.front().front().mono.deg == 0;
  r->dim_ = r->zero_ ? -1 : leading_term_dimension(*r->poly_, r->gb_);
  return r;
}

RingPtr GradedRing::make(const Field& field, const std::vector<std::string>& names, const std::vector<int>& degrees,
                         const std::vector<std::string>& relations) {
  auto poly = std::make_shared<const PolyRing>(field, names, degrees);
  std::vector<Poly> rels;
  for (const auto& s : relations) rels.push_back(parse_poly(*poly, s));
  return make(poly, rels);
}

RingPtr GradedRing::polynomial(const Field& field, const std::vector<std::string>& names) {
  return make(field, names, std::vector<int>(names.size(), 1), {});
}

Poly GradedRing::normal_form(const Poly& f) const {
  if (zero_) return {};
  if (gb_.empty()) return f;
  return ideal_normal_form(*poly_, gb_, f);
}

Poly GradedRing::mul(const Poly& f, const Poly& g) const { return normal_form(poly_mul(field(), f, g)); }

Poly GradedRing::parse(const std::string& text) const { return parse_poly(*poly_, text); }

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  int n = ring.nvars();
  Monomial cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left == 0) {
        cur.deg = degree;
        out.push_back(cur);
      }
      return;
    }
    int w = ring.weights()[i];
    for (int e = left / w; e >= 0; --e) {
      cur.exp[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e * w);
    }
    cur.exp[i] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

std::vector<Monomial> GradedRing::standard_monomials(int degree) const {
  std::vector<Monomial> out;
  if (zero_) return out;
  for (const auto& m : monomials_of_degree(*poly_, degree)) {
    bool standard = true;
    for (const auto& g : gb_)
      if (divides(g.front().mono, m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

RingPtr GradedRing::quotient(const std::vector<Poly>& extra) const {
  std::vector<Poly> rels = relations_;
  for (const auto& f : extra) {
    Poly nf = normal_form(f);
    if (!nf.empty()) rels.push_back(nf);
  }
  return make(poly_, rels);
}

bool GradedRing::verify_groebner() const {
  const Field& k = field();
  for (std::size_t i = 0; i < gb_.size(); ++i)
    for (std::size_t j = i + 1; j < gb_.size(); ++j) {
      const Term& a = gb_[i].front();
      const Term& b = gb_[j].front();
      Monomial l = poly_->lcm(a.mono, b.mono);
      Poly s = poly_mul_term(k, gb_[i], k.inv(a.coef), findim::quotient(l, a.mono));
      poly_axpy(k, s, k.neg(k.inv(b.coef)), findim::quotient(l, b.mono), gb_[j]);
      if (!ideal_normal_form(*poly_, gb_, s).empty()) return false;
    }
  return true;
}

bool GradedRing::same_ring(const GradedRing& other) const {
  if (!(*poly_ == *other.poly_) || gb_.size() != other.gb_.size()) return false;
  for (std::size_t i = 0; i < gb_.size(); ++i)
    if (!poly_equal(gb_[i], other.gb_[i])) return false;
  return true;
}

std::string GradedRing::describe() const {
  std::string s = field().is_rational() ? "Q" : "F" + std::to_string(field().characteristic());
  s += "[";
  for (int i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += poly_->names()[i];
  }
  s += "]";
  if (!gb_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < gb_.size(); ++i) {
      if (i) s += ", ";
      s += to_string(*poly_, gb_[i]);
    }
    s += ")";
  }
  return s;
}

std::vector<Poly> groebner_basis(const GradedRing& ring, const std::vector<Poly>& gens) {
  for (const auto& f : gens)
    if (!is_homogeneous(f)) throw InputError("generator " + ring.str(f) + " is not homogeneous");
  std::vector<Poly> all = ring.gb();
  all.insert(all.end(), gens.begin(), gens.end());
  std::vector<Poly> gb = ideal_groebner(ring.poly(), all);
  if (ring.gb().empty()) return gb;
  std::vector<Poly> out;
  for (auto& g : gb)
    if (!ring.normal_form(g).empty()) out.push_back(std::move(g));
  return out;
}

}  // namespace findim

#include "findim/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "findim/dimensions.hpp"

namespace findim {

namespace {

RingPtr make_ring(const Field& k, const std::vector<std::string>& vars, const std::vector<std::string>& rels = {}) {
  return GradedRing::make(k, vars, std::vector<int>(vars.size(), 1), rels);
}

int pick(std::mt19937& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

}  // namespace

DGRingPtr fixture_polynomial(const Field& k) { return build_ring_dg(make_ring(k, {"x", "y"})); }

DGRingPtr fixture_koszul(const Field& k) {
  auto R = make_ring(k, {"x", "y"});
  return build_koszul_dg(R, {R->parse("x"), R->parse("x*y")});
}

DGRingPtr fixture_koszul3(const Field& k) {
  auto R = make_ring(k, {"x", "y", "z"});
  return build_koszul_dg(R, {R->parse("x"), R->parse("x*y")});
}

DGRingPtr fixture_nonreduced(const Field& k) { return build_ring_dg(make_ring(k, {"x", "y"}, {"x^2", "x*y"})); }

DGRingPtr fixture_trivial_extension(const Field& k) {
  return build_trivial_extension(make_ring(k, {"x"}), make_ring(k, {}), 1);
}

DGRingPtr fixture_depth_drop(const Field& k) {
  auto R = make_ring(k, {"x", "y"});
  return build_trivial_extension_module(R, {R->parse("x")}, 1);
}

std::vector<Fixture> property_families(const Field& k) {
  return {{"k[x,y]", fixture_polynomial(k)},
          {"K(k[x,y]; x, xy)", fixture_koszul(k)},
          {"(k[x] x k) ⋉ k[1]", fixture_trivial_extension(k)}};
}

std::vector<std::pair<Fixture, int>> small_finitistic_fixtures(const Field& k) {
  return {{{"k[x,y]", fixture_polynomial(k)}, 2},
          {{"K(k[x,y]; x, xy)", fixture_koszul(k)}, 0},
          {{"K(k[x,y,z]; x, xy)", fixture_koszul3(k)}, 1},
          {{"k[x,y]/(x^2, xy)", fixture_nonreduced(k)}, 0}};
}

namespace {

DGModule random_piece(const DGRingPtr& A, std::mt19937& rng) {
  std::vector<int> live;
  for (int f = 0; f < A->nfactors(); ++f)
    if (!A->factors[f]->is_zero()) live.push_back(f);
  int f = live[pick(rng, static_cast<int>(live.size()))];
  DGRingPtr Af = factor_ring(A, f);
  const GradedRing& R = Af->factors[0]->base();
  std::vector<Poly> pool = default_depth_pool(R);
  DGModule M;
  int kind = pick(rng, pool.empty() ? 2 : 5);
  if (pool.empty()) kind += 3;
  switch (kind) {
    case 0:
    case 1: {
      int l = 1 + pick(rng, 2);
      std::vector<std::vector<Poly>> seq;
      for (int i = 0; i < l; ++i) seq.push_back({pool[pick(rng, static_cast<int>(pool.size()))]});
      M = koszul_dg_module(Af, seq);
      break;
    }
    case 2:
      M = h0_quotient_module(Af, 0, {pool[pick(rng, static_cast<int>(pool.size()))]});
      break;
    case 3:
      M = residue_field_module(Af);
      break;
    default:
      M = free_dg_module(Af);
      break;
  }
  M = shift_module(M, pick(rng, 3));
  return extend_by_zero(A, f, M);
}

}  // namespace

DGModule random_module(const DGRingPtr& A, std::mt19937& rng) {
  DGModule M = random_piece(A, rng);
  if (pick(rng, 2)) M = direct_sum(M, random_piece(A, rng));
  return M;
}

PModule redundant_presentation(const GradedRing& R, const PModule& M, std::mt19937& rng) {
  const Field& k = R.field();
  int n = M.rank();
  PModule out = M;
  if (n > 0 && R.nvars() > 0) {
    // New generator e' = x_v e_i.
    int i = pick(rng, n), v = pick(rng, R.nvars());
    out.twists.push_back(M.twists[i] - R.poly().weights()[v]);
    for (auto& r : out.rels) r.push_back(Poly{});
    Column link(n + 1);
    link[n] = poly_constant(k, Scalar(1));
    link[i] = poly_neg(k, poly_monomial(k, Scalar(1), R.poly().var(v)));
    out.rels.push_back(std::move(link));
  }
  std::vector<Column> extra;
  for (std::size_t a = 0; a < out.rels.size() && extra.size() < 2; ++a) {
    if (!pick(rng, 2) || R.nvars() == 0) continue;
    Poly m = poly_monomial(k, Scalar(1), R.poly().var(pick(rng, R.nvars())));
    Column c = column_scale(R, out.rels[a], m);
    std::size_t b = static_cast<std::size_t>(pick(rng, static_cast<int>(out.rels.size())));
    if (column_degree(out.twists, out.rels[b]) == column_degree(out.twists, c))
      c = column_add(k, c, column_scale(R, out.rels[b], poly_constant(k, k.from_int(1 + pick(rng, 3)))));
    extra.push_back(std::move(c));
  }
  if (!out.rels.empty()) extra.push_back(out.rels[pick(rng, static_cast<int>(out.rels.size()))]);
  for (auto& c : extra) out.rels.push_back(std::move(c));
  std::vector<int> perm(out.twists.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  PModule P;
  for (int p : perm) P.twists.push_back(out.twists[p]);
  for (const auto& r : out.rels) {
    Column c(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) c[j] = r[perm[j]];
    P.rels.push_back(std::move(c));
  }
  std::shuffle(P.rels.begin(), P.rels.end(), rng);
  return P;
}

}  // namespace findim

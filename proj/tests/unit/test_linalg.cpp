#include <random>

#include "doctest.h"
#include "findim/linalg.hpp"

using namespace findim;

namespace {

DenseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  DenseMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

DenseMatrix over(const Field& k, DenseMatrix m) {
  for (auto& x : m.a) k.normalize(x);
  return m;
}

DenseMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(0, 9), entry(-3, 3), sparse(0, 2);
  DenseMatrix m(dim(rng), dim(rng));
  for (auto& x : m.a) x = sparse(rng) == 0 ? 0 : entry(rng);
  // Repeat a row now and then so rank deficiency is common.
  if (m.rows > 1 && sparse(rng) == 0)
    for (int c = 0; c < m.cols; ++c) m.at(m.rows - 1, c) = 2 * m.at(0, c);
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  Field Q = Field::rationals(), F2 = Field::prime(2);
  DenseMatrix m = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(rank(Q, m) == 2);
  CHECK(rank(Q, from_rows({{1, 1}, {1, -1}})) == 2);
  CHECK(rank(F2, over(F2, from_rows({{1, 1}, {1, -1}}))) == 1);
  CHECK(rank(Q, DenseMatrix(0, 4)) == 0);
  CHECK(rank(Q, DenseMatrix(3, 3)) == 0);
  DenseMatrix r = m;
  CHECK(row_reduce(Q, r) == std::vector<int>{0, 1});
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(0, 2) == -1);
  CHECK(r.at(1, 2) == 2);
  CHECK(r.at(2, 2) == 0);
}

TEST_CASE("nullspace vectors are killed and count cols minus rank") {
  std::mt19937 rng(23);
  for (const Field& k : {Field::rationals(), Field::prime(7)})
    for (int t = 0; t < 40; ++t) {
      DenseMatrix m = over(k, random_matrix(rng));
      auto N = nullspace(k, m);
      CHECK(static_cast<int>(N.size()) == m.cols - rank(k, m));
      for (const auto& v : N)
        for (int r = 0; r < m.rows; ++r) {
          Scalar s = 0;
          for (int c = 0; c < m.cols; ++c) s += m.at(r, c) * v[c];
          k.normalize(s);
          CHECK(s == 0);
        }
    }
}

TEST_CASE("parallel kernels agree with the serial reference") {
  std::mt19937 rng(29);
  for (const Field& k : {Field::rationals(), Field::prime(32003)}) {
    std::vector<DenseMatrix> batch;
    for (int t = 0; t < 40; ++t) {
      DenseMatrix m = over(k, random_matrix(rng));
      batch.push_back(m);
      CHECK(rank(k, m, Kernel::serial) == rank(k, m, Kernel::parallel));
      DenseMatrix a = m, b = m;
      CHECK(row_reduce(k, a, Kernel::serial) == row_reduce(k, b, Kernel::parallel));
      CHECK(a.a == b.a);
      CHECK(nullspace(k, m, Kernel::serial) == nullspace(k, m, Kernel::parallel));
    }
    std::vector<int> serial = batch_rank(k, batch, Kernel::serial);
    CHECK(serial == batch_rank(k, batch, Kernel::parallel));
    for (std::size_t i = 0; i < batch.size(); ++i) CHECK(serial[i] == rank(k, batch[i]));
  }
}

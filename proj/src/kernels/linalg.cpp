#include "findim/linalg.hpp"

#include <omp.h>

#include <cstdint>

namespace findim {

namespace {

std::vector<int> echelon_modp(std::vector<std::uint64_t>& a, int rows, int cols, std::uint64_t p, bool parallel) {
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (a[static_cast<std::size_t>(r) * cols + c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * cols + j], a[static_cast<std::size_t>(row) * cols + j]);
    std::uint64_t* pr = &a[static_cast<std::size_t>(row) * cols];
    std::uint64_t s = inv(pr[c]);
    for (int j = c; j < cols; ++j) pr[j] = pr[j] * s % p;
#pragma omp parallel for schedule(static) if (parallel)
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      std::uint64_t* rr = &a[static_cast<std::size_t>(r) * cols];
      std::uint64_t f = rr[c];
      if (!f) continue;
      for (int j = c; j < cols; ++j) rr[j] = (rr[j] + (p - f) * pr[j]) % p;
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<int> echelon_q(DenseMatrix& m, bool parallel) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols && row < m.rows; ++c) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) swap(m.at(piv, j), m.at(row, j));
    Scalar s = 1 / m.at(row, c);
    for (int j = c; j < m.cols; ++j) m.at(row, j) *= s;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, c) == 0) continue;
      Scalar f = m.at(r, c);
      for (int j = c; j < m.cols; ++j)
        if (m.at(row, j) != 0) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<int> row_reduce(const Field& k, DenseMatrix& m, Kernel kernel) {
  bool parallel = kernel == Kernel::parallel;
  if (k.is_rational()) return echelon_q(m, parallel);
  std::uint64_t p = k.characteristic();
  std::vector<std::uint64_t> a(m.a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Scalar v = m.a[i];
    k.normalize(v);
    a[i] = v.get_num().get_ui();
  }
  std::vector<int> piv = echelon_modp(a, m.rows, m.cols, p, parallel);
  for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = Scalar(static_cast<unsigned long>(a[i]));
  return piv;
}

int rank(const Field& k, DenseMatrix m, Kernel kernel) {
  return static_cast<int>(row_reduce(k, m, kernel).size());
}

std::vector<std::vector<Scalar>> nullspace(const Field& k, const DenseMatrix& m, Kernel kernel) {
  DenseMatrix e = m;
  std::vector<int> piv = row_reduce(k, e, kernel);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = k.neg(e.at(static_cast<int>(r), f));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> batch_rank(const Field& k, const std::vector<DenseMatrix>& ms, Kernel kernel) {
  std::vector<int> out(ms.size());
  const int n = static_cast<int>(ms.size());
#pragma omp parallel for schedule(dynamic) if (kernel == Kernel::parallel)
  for (int i = 0; i < n; ++i) out[i] = rank(k, ms[i], Kernel::serial);
  return out;
}

}  // namespace findim

#include "e8kit/linalg.hpp"

#include <algorithm>

namespace e8kit {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const mpq_class inv = 1 / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const mpq_class f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

QMatrix nullspace(const QMatrix& m) {
  QMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, f);
  }
  return basis;
}

std::size_t rank(const QMatrix& m) {
  QMatrix r = m;
  return rref(r).size();
}

std::vector<mpq_class> diagonalize_symmetric(QMatrix g) {
  if (!g.is_symmetric()) throw std::invalid_argument("diagonalize_symmetric: matrix is not symmetric");
  const std::size_t n = g.rows();
  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(g(i, a), g(i, b));
  };
  std::vector<mpq_class> diag;
  diag.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (g(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // Every remaining diagonal entry is zero: fold a hyperbolic pair.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (g(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) throw std::domain_error("diagonalize_symmetric: degenerate form");
      for (std::size_t j = 0; j < n; ++j) g(pi, j) += g(pj, j);
      for (std::size_t i = 0; i < n; ++i) g(i, pi) += g(i, pj);
      pivot = pi;
    }
    swap_index(k, pivot);
    const mpq_class d = g(k, k);
    std::vector<std::size_t> coupled;
    for (std::size_t j = k + 1; j < n; ++j)
      if (g(k, j) != 0) coupled.push_back(j);
    for (auto i : coupled) {
      const mpq_class f = g(i, k) / d;
      for (auto j : coupled) g(i, j) -= f * g(k, j);
    }
    for (auto j : coupled) {
      g(k, j) = 0;
      g(j, k) = 0;
    }
    diag.push_back(d);
  }
  return diag;
}

}  // namespace e8kit

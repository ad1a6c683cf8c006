#include "e8kit/descent.hpp"

#include <random>
#include <stdexcept>

#include "e8kit/numtheory.hpp"

namespace e8kit {

QMatrix antidiagonal_ones(std::size_t n) {
  QMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s(i, n - 1 - i) = 1;
  return s;
}

QMatrix symplectic_gram(std::size_t n) {
  QMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + (n - 1 - i)) = 1;
    j(n + i, n - 1 - i) = -1;
  }
  return j;
}

QMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix e(n, n);
  e(i, j) = 1;
  return e;
}

QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
  QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t q = 0; q < b.rows(); ++q)
        for (std::size_t r = 0; r < b.cols(); ++r) k(i * b.rows() + q, j * b.cols() + r) = a(i, j) * b(q, r);
    }
  return k;
}

InvolutionAlgebra::InvolutionAlgebra(QMatrix u, Kind kind) : u_(std::move(u)), kind_(kind) {
  const QMatrix t = u_.transpose();
  const bool ok = kind == Kind::orthogonal ? t == u_ : t == mpq_class(-1) * u_;
  if (!ok) throw std::invalid_argument("InvolutionAlgebra: gram has the wrong symmetry for its kind");
  u_inv_ = inverse(u_);
}

QMatrix InvolutionAlgebra::apply(const QMatrix& x) const { return u_ * x.transpose() * u_inv_; }

InvolutionAlgebra gamma_involution(std::size_t n) {
  return InvolutionAlgebra(inverse(symplectic_gram(n)), InvolutionAlgebra::Kind::symplectic);
}

InvolutionAlgebra sigma_involution(std::size_t n) {
  return InvolutionAlgebra(antidiagonal_ones(2 * n), InvolutionAlgebra::Kind::orthogonal);
}

namespace {

void place_block(QMatrix& m, std::size_t bi, std::size_t bj, const QMatrix& block) {
  const std::size_t k = block.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(bi * k + i, bj * k + j) = block(i, j);
}

}  // namespace

InvolutionAlgebra sigma_prime16() {
  const QMatrix s4 = antidiagonal_ones(4);
  const QMatrix minus = mpq_class(-1) * s4;
  QMatrix u(16, 16);
  place_block(u, 0, 3, s4);
  place_block(u, 1, 2, minus);
  place_block(u, 2, 1, minus);
  place_block(u, 3, 0, s4);
  return InvolutionAlgebra(std::move(u), InvolutionAlgebra::Kind::orthogonal);
}

QMatrix conjugation_matrix() {
  const QMatrix id = QMatrix::identity(4);
  QMatrix v(16, 16);
  place_block(v, 0, 0, id);
  place_block(v, 1, 2, id);
  place_block(v, 2, 1, mpq_class(-1) * id);
  place_block(v, 3, 3, id);
  return v;
}

IsoReport kronecker_iso(std::size_t samples, std::uint64_t seed) {
  IsoReport rep;
  const auto g2 = gamma_involution(1);
  const auto g8 = gamma_involution(4);
  const auto sp = sigma_prime16();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t q = 0; q < 8; ++q)
        for (std::size_t r = 0; r < 8; ++r) {
          const QMatrix x = matrix_unit(2, i, j);
          const QMatrix y = matrix_unit(8, q, r);
          ++rep.checked;
          if (kronecker(g2.apply(x), g8.apply(y)) != sp.apply(kronecker(x, y))) ++rep.failures;
        }

  auto check_product = [&](std::size_t i1, std::size_t j1, std::size_t q1, std::size_t r1, std::size_t i2,
                           std::size_t j2, std::size_t q2, std::size_t r2) {
    const QMatrix x1 = matrix_unit(2, i1, j1), y1 = matrix_unit(8, q1, r1);
    const QMatrix x2 = matrix_unit(2, i2, j2), y2 = matrix_unit(8, q2, r2);
    ++rep.checked;
    if (kronecker(x1, y1) * kronecker(x2, y2) != kronecker(x1 * x2, y1 * y2)) ++rep.failures;
  };
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = 0; b < 16; ++b)
      check_product(0, (a >> 2) & 1, (a >> 1) & 1, a & 1, (b >> 3) & 1, (b >> 2) & 1, (b >> 1) & 1, b & 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> d2(0, 1), d8(0, 7);
  for (std::size_t s = 0; s < samples; ++s)
    check_product(d2(rng), d2(rng), d8(rng), d8(rng), d2(rng), d2(rng), d8(rng), d8(rng));
  return rep;
}

IsoReport conjugation_iso() {
  IsoReport rep;
  const QMatrix v = conjugation_matrix();
  const QMatrix v_inv = inverse(v);
  const auto s16 = sigma_involution(8);
  const auto sp = sigma_prime16();
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const QMatrix x = matrix_unit(16, i, j);
      ++rep.checked;
      if (s16.apply(v * x * v_inv) != v * sp.apply(x) * v_inv) ++rep.failures;
    }
  return rep;
}

IsoReport composite_multiplicativity(std::size_t samples, std::uint64_t seed) {
  IsoReport rep;
  const QMatrix v = conjugation_matrix();
  const QMatrix v_inv = inverse(v);
  auto phi = [&](const QMatrix& x, const QMatrix& y) { return v * kronecker(x, y) * v_inv; };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> d2(0, 1), d8(0, 7);
  for (std::size_t s = 0; s < samples; ++s) {
    const QMatrix x1 = matrix_unit(2, d2(rng), d2(rng)), y1 = matrix_unit(8, d8(rng), d8(rng));
    const QMatrix x2 = matrix_unit(2, d2(rng), d2(rng)), y2 = matrix_unit(8, d8(rng), d8(rng));
    ++rep.checked;
    if (phi(x1 * x2, y1 * y2) != phi(x1, y1) * phi(x2, y2)) ++rep.failures;
  }
  return rep;
}

QMatrix sl2_image() {
  const QMatrix v = conjugation_matrix();
  return v * kronecker(matrix_unit(2, 0, 1), QMatrix::identity(8)) * inverse(v);
}

QMatrix sl2_image_expected() {
  QMatrix m(16, 16);
  const QMatrix id = QMatrix::identity(4);
  place_block(m, 0, 1, id);
  place_block(m, 2, 3, mpq_class(-1) * id);
  return m;
}

QuadExtMatrix QuadExtMatrix::conjugate() const { return {a, e0, mpq_class(-1) * e1}; }

QuadExtMatrix operator*(const QuadExtMatrix& x, const QuadExtMatrix& y) {
  if (x.a != y.a) throw std::invalid_argument("QuadExtMatrix: different quadratic extensions");
  return {x.a, x.e0 * y.e0 + mpq_class(x.a) * (x.e1 * y.e1), x.e0 * y.e1 + x.e1 * y.e0};
}

bool QuadExtMatrix::is_identity() const { return e0 == QMatrix::identity(size()) && e1.is_zero(); }

QuadExtMatrix rational_quad_matrix(std::int64_t a, const QMatrix& m) { return {a, m, QMatrix(m.rows(), m.cols())}; }

bool satisfies_cocycle(const QuadExtMatrix& eta) { return (eta * eta.conjugate()).is_identity(); }

QForm descent_form(const QuadExtMatrix& eta, const QMatrix& s) {
  const std::size_t n = eta.size();
  if (!s.is_symmetric() || s.rows() != n) throw std::invalid_argument("descent_form: S must be symmetric of matching size");
  if (!satisfies_cocycle(eta)) throw std::invalid_argument("descent_form: cocycle condition fails");

  // x = u + v sqrt(a) is fixed by eta iota iff
  //   (E0 - 1) u - a E1 v = 0  and  E1 u - (E0 + 1) v = 0.
  QMatrix sys(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class delta = i == j ? 1 : 0;
      sys(i, j) = eta.e0(i, j) - delta;
      sys(i, n + j) = -eta.a * eta.e1(i, j);
      sys(n + i, j) = eta.e1(i, j);
      sys(n + i, n + j) = -(eta.e0(i, j) + delta);
    }
  const QMatrix basis = nullspace(sys);
  if (basis.cols() != n) throw std::domain_error("descent_form: fixed space has the wrong dimension");

  QMatrix u(n, n), v(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      u(i, k) = basis(i, k);
      v(i, k) = basis(n + i, k);
    }
  const QMatrix ut = u.transpose(), vt = v.transpose();
  const QMatrix rational = ut * s * u + mpq_class(eta.a) * (vt * s * v);
  const QMatrix irrational = ut * s * v + vt * s * u;
  if (!irrational.is_zero()) throw std::logic_error("descent_form: restricted form is not rational");
  return QForm::from_rationals(Field::Q, diagonalize_symmetric(rational));
}

QuadExtMatrix plane_cocycle(std::int64_t a, const mpq_class& c) {
  QMatrix m(2, 2);
  m(0, 1) = c;
  m(1, 0) = 1 / c;
  return rational_quad_matrix(a, m);
}

QMatrix crux_matrix(std::int64_t b) {
  if (b == 0) throw std::invalid_argument("crux_matrix: b must be nonzero");
  const mpq_class bb(b);
  const mpq_class entries[8] = {-1, 1 / bb, -bb, 1, 1, -1 / bb, bb, -1};
  QMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, 7 - i) = entries[i];
  return m;
}

CruxReport crux_form(std::int64_t a, std::int64_t b) {
  if (a == 0 || nt::squarefree_part(a) == 1) throw std::invalid_argument("crux_form: a must be a nonsquare");
  const QMatrix m = crux_matrix(b);
  const QMatrix s8 = antidiagonal_ones(8);
  CruxReport rep;
  rep.orthogonal = m.transpose() * s8 * m == s8;
  rep.involutive = m * m == QMatrix::identity(8);
  rep.preserves_planes = true;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (m(i, j) != 0 && j != i && j != 7 - i) rep.preserves_planes = false;

  const QMatrix s2 = antidiagonal_ones(2);
  for (std::size_t i = 0; i < 4; ++i) {
    QMatrix eta(2, 2);
    eta(0, 0) = m(i, i);
    eta(0, 1) = m(i, 7 - i);
    eta(1, 0) = m(7 - i, i);
    eta(1, 1) = m(7 - i, 7 - i);
    rep.form = rep.form + descent_form(rational_quad_matrix(a, eta), s2);
  }
  rep.whole_form = descent_form(rational_quad_matrix(a, m), s8);
  rep.witt_index = witt_decompose(rep.form).witt_index;
  return rep;
}

QForm crux_expected(std::int64_t a, std::int64_t b) {
  return QForm(Field::Q, {2}) * QForm(Field::Q, {-1, b, -b, 1}) * QForm(Field::Q, {1, -a});
}

}  // namespace e8kit

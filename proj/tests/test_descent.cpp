#include <doctest.h>

#include <random>

#include "e8kit/descent.hpp"

using namespace e8kit;

TEST_SUITE("descent") {
  TEST_CASE("Kronecker product on matrix units") {
    const QMatrix e = kronecker(matrix_unit(2, 0, 0), matrix_unit(8, 0, 0));
    CHECK(e == matrix_unit(16, 0, 0));
    CHECK(kronecker(matrix_unit(2, 0, 1), matrix_unit(8, 2, 3)) == matrix_unit(16, 2, 11));
  }

  TEST_CASE("involutions are anti-automorphisms of order two") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-3, 3);
    for (const auto& inv : {gamma_involution(1), gamma_involution(4), sigma_involution(8), sigma_prime16()}) {
      const std::size_t n = inv.size();
      for (int t = 0; t < 5; ++t) {
        QMatrix x(n, n), y(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            x(i, j) = d(rng);
            y(i, j) = d(rng);
          }
        CHECK(inv.apply(inv.apply(x)) == x);
        CHECK(inv.apply(x * y) == inv.apply(y) * inv.apply(x));
      }
    }
    CHECK(gamma_involution(4).kind() == InvolutionAlgebra::Kind::symplectic);
    CHECK(sigma_involution(8).kind() == InvolutionAlgebra::Kind::orthogonal);
    CHECK(sigma_prime16().kind() == InvolutionAlgebra::Kind::orthogonal);
  }

  TEST_CASE("isomorphism checks") {
    CHECK(kronecker_iso(2000, 1).ok());
    CHECK(conjugation_iso().ok());
    CHECK(conjugation_iso().checked == 256);
    CHECK(composite_multiplicativity(2000, 2).ok());
  }

  TEST_CASE("conjugating matrix") {
    const QMatrix u = conjugation_matrix();
    const QMatrix utu = u.transpose() * u;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        if (i != j) CHECK(utu(i, j) == 0);
    CHECK(u.transpose() * antidiagonal_ones(16) * u == sigma_prime16().gram());
  }

  TEST_CASE("image of the nilpotent sl2 generator") {
    const QMatrix img = sl2_image();
    CHECK(img == sl2_image_expected());
    CHECK((img * img).is_zero());
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(img(i, 4 + i) == 1);
      CHECK(img(8 + i, 12 + i) == -1);
    }
  }

  TEST_CASE("two-dimensional descent") {
    const auto eta = plane_cocycle(5, 3);
    CHECK(satisfies_cocycle(eta));
    const QForm f = descent_form(eta, antidiagonal_ones(2));
    CHECK(witt_equal(f, QForm(Field::Q, {6, -30})));
    CHECK(invariants(f) == invariants(QForm(Field::Q, {6, -30})));
    CHECK(witt_equal(descent_form(plane_cocycle(5, 1), antidiagonal_ones(2)), QForm(Field::Q, {2, -10})));
    const QForm trivial = descent_form(rational_quad_matrix(5, QMatrix::identity(2)), antidiagonal_ones(2));
    CHECK(is_hyperbolic(trivial));
  }

  TEST_CASE("descent over random parameters") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<std::int64_t> d(-40, 40);
    int done = 0;
    while (done < 100) {
      const auto a = d(rng), c = d(rng);
      if (a == 0 || c == 0 || square_class(Field::Q, a) == 1) continue;
      ++done;
      CHECK(witt_equal(descent_form(plane_cocycle(a, c), antidiagonal_ones(2)), scale(QForm(Field::Q, {1, -a}), 2 * c)));
    }
  }

  TEST_CASE("descent errors") {
    QuadExtMatrix bad = rational_quad_matrix(5, QMatrix::identity(2));
    bad.e0(0, 0) = 2;
    CHECK_THROWS_AS(descent_form(bad, antidiagonal_ones(2)), std::invalid_argument);
  }

  TEST_CASE("crux matrix") {
    const QMatrix m = crux_matrix(3);
    CHECK(m * m == QMatrix::identity(8));
    CHECK(m.transpose() * antidiagonal_ones(8) * m == antidiagonal_ones(8));
    for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {5, 7}, {-1, 2}, {3, -5}}) {
      const auto rep = crux_form(a, b);
      CHECK(rep.witt_index == 4);
      CHECK(rep.preserves_planes);
      CHECK(witt_equal(rep.form, crux_expected(a, b)));
      CHECK(witt_equal(rep.whole_form, rep.form));
    }
    CHECK_THROWS(crux_form(4, 3));
  }
}

#include <doctest.h>

#include <random>
#include <set>

#include "e8kit/numtheory.hpp"
#include "e8kit/qform.hpp"
#include "oracles.hpp"

using namespace e8kit;

namespace {

std::int64_t nonzero(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  std::int64_t v = 0;
  while (v == 0) v = d(rng);
  return v;
}

QForm random_form(std::mt19937_64& rng, std::size_t dim, Field f = Field::Q) {
  std::vector<std::int64_t> e;
  for (std::size_t i = 0; i < dim; ++i) e.push_back(nonzero(rng, -30, 30));
  return QForm(f, e);
}

}  // namespace

TEST_SUITE("qform") {
  TEST_CASE("Hilbert symbol agrees with local solubility") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 150; ++t) {
      const auto a = nonzero(rng, -30, 30), b = nonzero(rng, -30, 30);
      for (std::uint64_t p : {2, 3, 5, 7}) CHECK(hilbert_symbol(a, b, Place::prime(p)) == oracle::hilbert_local(a, b, p));
    }
    CHECK(hilbert_symbol(11, 2, Place::prime(11)) == oracle::hilbert_local(11, 2, 11));
  }

  TEST_CASE("Hilbert reciprocity and global splitting") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 200; ++t) {
      const auto a = nonzero(rng, -60, 60), b = nonzero(rng, -60, 60);
      int prod = hilbert_symbol(a, b, Place::infinity());
      std::set<std::uint64_t> primes{2};
      for (auto p : nt::prime_support(a)) primes.insert(p);
      for (auto p : nt::prime_support(b)) primes.insert(p);
      for (auto p : primes) prod *= hilbert_symbol(a, b, Place::prime(p));
      CHECK(prod == 1);
      CHECK(brauer_class(Quaternion(Field::Q, a, b)).is_split() == oracle::splits_globally(a, b));
    }
  }

  TEST_CASE("Brauer classes") {
    const auto h = brauer_class(Quaternion(Field::Q, -1, -1));
    CHECK(h.is_ramified_at(Place::prime(2)));
    CHECK(h.is_ramified_at(Place::infinity()));
    CHECK(h.ramified().size() == 2);
    CHECK((h + h).is_split());
    CHECK(brauer_class(Quaternion(Field::Q, 1, 7)).is_split());
    CHECK(brauer_class(Quaternion(Field::R, -1, -1)).is_ramified_at(Place::infinity()));
    CHECK_THROWS(Place::prime(15));
  }

  TEST_CASE("invariants of small forms") {
    const auto hplane = invariants(QForm(Field::Q, {1, -1}));
    CHECK(hplane.dim == 2);
    CHECK(hplane.disc == 1);
    CHECK(hplane.clifford.is_split());
    CHECK(hplane.signature == 0);
    const auto four = invariants(QForm(Field::Q, {1, 1, 1, 1}));
    CHECK(four.signature == 4);
    CHECK(four.disc == 1);
    CHECK(four.clifford == brauer_class(Quaternion(Field::Q, -1, -1)));
    const auto p3 = invariants(pfister(Field::Q, {-1, -1, -1}));
    CHECK(p3.signature == 8);
    CHECK(p3.clifford.is_split());
  }

  TEST_CASE("norm forms carry the quaternion class") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
      const Quaternion q(Field::Q, nonzero(rng, -30, 30), nonzero(rng, -30, 30));
      const auto inv = invariants(quaternion_forms(q).norm);
      CHECK(inv.clifford == brauer_class(q));
      CHECK(inv.disc == 1);
    }
  }

  TEST_CASE("Witt ring laws") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 100; ++t) {
      const QForm a = random_form(rng, 1 + t % 5), b = random_form(rng, 1 + t % 3), c = random_form(rng, 2);
      CHECK(is_hyperbolic(a - a));
      CHECK(witt_equal(a + b, b + a));
      CHECK(witt_equal(a * (b + c), a * b + a * c));
      CHECK(witt_equal(a * b, b * a));
      CHECK(invariants(a + hyperbolic(Field::Q, 2)).signature == invariants(a).signature);
      CHECK(witt_equal(a + hyperbolic(Field::Q, 3), a));
    }
    CHECK(witt_equal(QForm(Field::Q, {2, 2}), QForm(Field::Q, {1, 1})));
    CHECK_FALSE(witt_equal(QForm(Field::Q, {1, 1}), QForm(Field::Q, {1, -1})));
    CHECK(witt_equal(multiple(QForm(Field::Q, {2}), 8), multiple(QForm(Field::Q, {1}), 8)));
    CHECK_THROWS_AS(witt_equal(QForm(Field::Q, {1}), QForm(Field::R, {1})), FieldMismatch);
  }

  TEST_CASE("Pfister forms are round") {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 50; ++t) {
      const QForm p = pfister(Field::Q, {nonzero(rng, -20, 20), nonzero(rng, -20, 20)});
      CHECK(witt_equal(p * p, 4 * p));
      CHECK(in_In(p, 2));
    }
  }

  TEST_CASE("isotropy") {
    CHECK(is_isotropic(QForm(Field::Q, {1, -1})));
    CHECK_FALSE(is_isotropic(QForm(Field::Q, {1, 1, 1, 1})));
    CHECK(is_isotropic(QForm(Field::Q, {1, 1, 1, 1, 1, -7})));
    CHECK(is_isotropic(QForm(Field::R, {1, 1, -1})));
    CHECK_FALSE(is_isotropic(QForm(Field::R, {-1, -1, -1})));
    CHECK_THROWS(is_isotropic(QForm(Field::Q)));
    std::mt19937_64 rng(26);
    for (int t = 0; t < 200; ++t) {
      const QForm q = random_form(rng, 2 + t % 3);
      CHECK(is_isotropic(q) == !oracle::isotropic_vector(q.entries(), 60).empty());
    }
  }

  TEST_CASE("Witt decomposition examples") {
    const auto a = witt_decompose(QForm(Field::Q, {1, -1, 1, -1}));
    CHECK(a.witt_index == 2);
    CHECK(a.kernel.dim == 0);
    const auto b = witt_decompose(QForm(Field::Q, {1, 1, 1, 1, 1, -7}));
    CHECK(b.witt_index == 1);
    CHECK(b.kernel.dim == 4);
    CHECK(b.kernel.signature == 4);
    const QForm crux = QForm(Field::Q, {2}) * QForm(Field::Q, {-1, 3, -3, 1}) * QForm(Field::Q, {1, -2});
    CHECK(witt_decompose(crux).witt_index == 4);
  }

  TEST_CASE("I^n levels") {
    const QForm one(Field::R, {1});
    CHECK(i_level(multiple(one, 32)) == 5);
    CHECK(i_level(multiple(one, 256)) == 8);
    CHECK(i_level(hyperbolic(Field::Q, 3)) == kILevelHyperbolic);
    CHECK(in_In(pfister(Field::Q, {3, 5, 7}), 3));
    CHECK(in_In(QForm(Field::Q, {1}), 0));
    CHECK_FALSE(in_In(QForm(Field::Q, {1}), 1));
    CHECK_FALSE(in_In(QForm(Field::Q, {1, 1}), 2));
    CHECK_THROWS(in_In(one, -1));
  }

  TEST_CASE("Arason invariant") {
    const QForm p = pfister(Field::Q, {-1, -1, -1});
    CHECK_FALSE(e3_zero(p));
    CHECK(e3_symbol_length(p) == 1);
    CHECK(e3_zero(multiple(p, 2)));
    CHECK(e3_symbol_length(multiple(p, 2)) == 0);
    CHECK(e3_zero(pfister(Field::Q, {1, 5, 7})));
    CHECK_THROWS_AS(e3_zero(QForm(Field::Q, {1, 1})), std::domain_error);
  }

  TEST_CASE("twelve-dimensional I^3 forms land on realizable rows") {
    const QForm a = pfister(Field::Q, {-1}) * (QForm(Field::Q, {1, 1, 1}) + QForm(Field::Q, {-1, -3, -3}));
    REQUIRE(a.dim() == 12);
    CHECK(in_In(a, 3));
    CHECK(witt_decompose(a).witt_index == 6);
    CHECK(e3_symbol_length(a) == 0);
    const QForm b = pfister(Field::Q, {-1, -1, -1}) + hyperbolic(Field::Q, 2);
    CHECK(witt_decompose(b).witt_index == 2);
    CHECK(e3_symbol_length(b) == 1);
  }

  TEST_CASE("parsing") {
    CHECK(parse_form("1,-2,3", Field::Q) == QForm(Field::Q, {1, -2, 3}));
    CHECK(parse_form("<<-1,-1>>", Field::Q) == pfister(Field::Q, {-1, -1}));
    CHECK(parse_form("4,-8", Field::Q) == QForm(Field::Q, {1, -2}));
    CHECK_THROWS_WITH(parse_form("1,0", Field::Q), doctest::Contains("zero symbol entry"));
    CHECK_THROWS(parse_form("1,x", Field::Q));
  }

  TEST_CASE("square classes over R") {
    CHECK(QForm(Field::R, {5, -7}) == QForm(Field::R, {1, -1}));
    CHECK(square_class(Field::R, -12) == -1);
    CHECK(square_class(Field::Q, -12) == -3);
  }
}

#include <doctest.h>

#include <random>

#include "e8kit/chevalley.hpp"
#include "oracles.hpp"

using namespace e8kit;

namespace {

const LieAlgebra& e8() {
  static const LieAlgebra L(RootSystem(SystemLabel::E8));
  return L;
}

std::int64_t coefficient(const std::vector<Term>& v, std::size_t k) {
  std::int64_t c = 0;
  for (const auto& t : v)
    if (t.index == k) c += t.coef;
  return c;
}

// kappa(x, y) for sparse combinations against an integer Killing matrix.
std::int64_t form(const Matrix<std::int64_t>& k, const std::vector<Term>& x, const std::vector<Term>& y) {
  std::int64_t s = 0;
  for (const auto& a : x)
    for (const auto& b : y) s += a.coef * b.coef * k(a.index, b.index);
  return s;
}

}  // namespace

TEST_SUITE("chevalley") {
  TEST_CASE("sl2 relations") {
    const LieAlgebra a1(RootSystem(SystemLabel::A1));
    REQUIRE(a1.dim() == 3);
    const std::size_t h = a1.h_index(0), x = a1.x_index({1}), y = a1.x_index({-1});
    CHECK(coefficient(a1.bracket(h, x), x) == 2);
    CHECK(coefficient(a1.bracket(h, y), y) == -2);
    CHECK(coefficient(a1.bracket(x, y), h) == 1);
    CHECK(a1.bracket(x, y).size() == 1);
  }

  TEST_CASE("dimensions and Coxeter numbers") {
    CHECK(LieAlgebra(RootSystem(SystemLabel::D4)).dim() == 28);
    CHECK(LieAlgebra(RootSystem(SystemLabel::D8)).dim() == 120);
    CHECK(LieAlgebra(RootSystem(SystemLabel::D8)).coxeter_number() == 14);
    CHECK(e8().dim() == 248);
    CHECK(e8().coxeter_number() == 30);
    CHECK_THROWS(LieAlgebra(RootSystem(SystemLabel::C4)));
  }

  TEST_CASE("Jacobi identity on A1 and D4, exhaustively") {
    for (auto l : {SystemLabel::A1, SystemLabel::D4}) {
      const LieAlgebra L{RootSystem(l)};
      std::size_t bad = 0;
      for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = 0; b < L.dim(); ++b)
          for (std::size_t c = 0; c < L.dim(); ++c)
            if (!jacobiator(L, a, b, c).empty()) ++bad;
      CHECK(bad == 0);
    }
  }

  TEST_CASE("Jacobi identity on E8, sampled, and on every root pair with a Cartan element") {
    const auto& L = e8();
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, L.dim() - 1);
    std::size_t bad = 0;
    for (int s = 0; s < 100000; ++s)
      if (!jacobiator(L, pick(rng), pick(rng), pick(rng)).empty()) ++bad;
    CHECK(bad == 0);
    const auto& roots = L.root_system().roots();
    for (const auto& a : roots)
      for (const auto& b : roots) {
        const auto i = L.x_index(a), j = L.x_index(b);
        if (!jacobiator(L, i, j, 0).empty()) ++bad;
      }
    CHECK(bad == 0);
  }

  TEST_CASE("structure constants are +-(p+1)") {
    const auto& L = e8();
    const auto& rs = L.root_system();
    for (const auto& a : rs.roots())
      for (const auto& b : rs.roots()) {
        IVec s(8);
        for (std::size_t i = 0; i < 8; ++i) s[i] = a[i] + b[i];
        const auto n = L.structure_constant(a, b);
        if (rs.is_root(s))
          CHECK(std::abs(n) == 1);  // simply laced: the alpha-string through beta has p = 0
        else
          CHECK(n == 0);
      }
  }

  TEST_CASE("Killing matrix: parallel equals serial, and dense traces agree") {
    const LieAlgebra d8(RootSystem(SystemLabel::D8));
    const auto par = killing_integer_matrix(d8);
    CHECK(par == killing_integer_matrix_serial(d8));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, d8.dim() - 1);
    for (int s = 0; s < 40; ++s) {
      const auto a = pick(rng), b = pick(rng);
      CHECK(par(a, b) == oracle::killing_dense(d8, a, b));
    }
    for (const auto& r : d8.root_system().roots()) {
      IVec n = r;
      for (auto& x : n) x = -x;
      CHECK(par(d8.x_index(r), d8.x_index(n)) == 28);
    }
  }

  TEST_CASE("Killing form is invariant") {
    const LieAlgebra d4(RootSystem(SystemLabel::D4));
    const auto k = killing_integer_matrix(d4);
    for (std::size_t x = 0; x < d4.dim(); ++x)
      for (std::size_t y = 0; y < d4.dim(); ++y)
        for (std::size_t z = 0; z < d4.dim(); ++z)
          CHECK(form(k, d4.bracket(x, y), {{static_cast<std::uint32_t>(z), 1}}) ==
                -form(k, {{static_cast<std::uint32_t>(y), 1}}, d4.bracket(x, z)));
  }

  TEST_CASE("Cartan restrictions") {
    const LieAlgebra a1(RootSystem(SystemLabel::A1));
    CHECK(witt_equal(cartan_restriction_witt(a1), QForm(Field::Q, {2})));
    CHECK(witt_equal(cartan_restriction_witt(e8()), multiple(QForm(Field::Q, {1}), 8)));
  }

  TEST_CASE("restricted_form over the Cartan of E8 gives the Cartan form") {
    const auto m = killing_matrix(e8(), FormScale::reduced_killing);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(m.gram(i, j) == e8().root_system().cartan()[i][j]);
  }

  TEST_CASE("branching requires the D8 table") {
    CHECK_THROWS(branching_check(e8(), embedding_table(EmbeddingTable::A1C4_in_E8)));
  }
}

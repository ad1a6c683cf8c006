#include "e8kit/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "e8kit/chevalley.hpp"
#include "e8kit/descent.hpp"
#include "e8kit/jinv.hpp"
#include "e8kit/rootsys.hpp"

namespace e8kit {

namespace {

using Check = std::function<CheckResult()>;

CheckResult verdict(std::string id, bool ok, std::string details = {}) {
  return {std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)};
}

template <typename T>
std::string str(const T& x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

// Real inputs: bit i of mask selects the Hamilton quaternion in slot i.
E8Input real_input(unsigned mask, std::int64_t c) {
  std::array<std::pair<std::int64_t, std::int64_t>, 4> slots;
  for (unsigned i = 0; i < 4; ++i) slots[i] = (mask >> i & 1u) ? std::pair{-1, -1} : std::pair{1, 1};
  return E8Input::make(Field::R, slots, c);
}

std::int64_t random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-15, 15);
  std::int64_t v = 0;
  while (v == 0) v = d(rng);
  return v;
}

E8Input random_q_input(std::mt19937_64& rng) {
  std::array<std::pair<std::int64_t, std::int64_t>, 4> slots;
  for (auto& s : slots) s = {random_entry(rng), random_entry(rng)};
  return E8Input::make(Field::Q, slots, random_entry(rng));
}

// ---------------------------------------------------------------- roots

std::vector<Check> roots_checks() {
  std::vector<Check> c;
  c.push_back([] {
    const std::pair<SystemLabel, std::size_t> expected[] = {
        {SystemLabel::A1, 2}, {SystemLabel::C4, 32}, {SystemLabel::D4, 24}, {SystemLabel::D8, 112}, {SystemLabel::E8, 240}};
    std::string details;
    bool ok = true;
    for (auto [label, n] : expected) {
      const RootSystem rs(label);
      ok = ok && rs.roots().size() == n;
      details += std::string(to_string(label)) + "=" + std::to_string(rs.roots().size()) + " ";
    }
    const RootSystem c4(SystemLabel::C4);
    const auto long_roots = std::count_if(c4.roots().begin(), c4.roots().end(), [&](const IVec& r) { return c4.lengthsq(r) == 2; });
    ok = ok && long_roots == 8;
    return verdict("root_counts", ok, details + "C4 long=" + std::to_string(long_roots));
  });
  c.push_back([] {
    const RootSystem e8(SystemLabel::E8);
    const IVec h = highest_root(e8);
    return verdict("e8_highest_root", h == IVec{2, 3, 4, 6, 5, 4, 3, 2} && e8.lengthsq(h) == 2, format_vector(h));
  });
  const std::pair<EmbeddingTable, const char*> tables[] = {{EmbeddingTable::D8_in_E8, "d8_in_e8_pairings"},
                                                           {EmbeddingTable::A1C4_in_D8, "a1c4_in_d8_pairings"},
                                                           {EmbeddingTable::A1C4_in_E8, "a1c4_in_e8_pairings"},
                                                           {EmbeddingTable::PGL2x4_in_E8, "pgl2x4_in_e8_pairings"}};
  for (auto [t, id] : tables) {
    c.push_back([t, id = std::string(id)] {
      const auto rep = verify_embedding(embedding_table(t));
      return verdict(id, rep.ok(),
                     std::to_string(rep.pairs.size()) + " pairings, " + std::to_string(rep.mismatches()) + " mismatches");
    });
  }
  c.push_back([] {
    const auto d8 = embedding_table(EmbeddingTable::D8_in_E8);
    return verdict("d8_in_e8_delta7", d8.row("delta7").image == IVec{0, 1, 0, 0, 0, 0, 0, 0},
                   format_vector(d8.row("delta7").image));
  });
  c.push_back([] {
    const auto composed = compose(embedding_table(EmbeddingTable::A1C4_in_D8), embedding_table(EmbeddingTable::D8_in_E8));
    const auto direct = embedding_table(EmbeddingTable::A1C4_in_E8);
    std::size_t bad = 0;
    for (const auto& r : direct.rows)
      if (composed.row(r.label).image != r.image) ++bad;
    return verdict("a1c4_composition", bad == 0, std::to_string(bad) + " rows differ");
  });
  c.push_back([] {
    const auto a1c4 = embedding_table(EmbeddingTable::A1C4_in_E8);
    const auto pgl = embedding_table(EmbeddingTable::PGL2x4_in_E8);
    std::size_t bad = 0;
    for (const auto& r : pgl2x4_via_c4()) {
      IVec img(8, 0);
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 8; ++i) img[i] += r.image[k] * a1c4.row("gamma" + std::to_string(k + 1)).image[i];
      if (img != pgl.row(r.label).image) ++bad;
    }
    const bool a1_same = pgl.row("alpha1").image == a1c4.row("alpha1").image;
    return verdict("pgl2x4_through_c4", bad == 0 && a1_same, std::to_string(bad) + " rows differ");
  });
  c.push_back([] {
    const RootSystem e8(SystemLabel::E8);
    const auto map = embedding_table(EmbeddingTable::A1C4_in_E8);
    std::vector<IVec> cw;
    for (const auto& r : map.rows)
      if (r.component == 1) cw.push_back(r.image);
    const auto sub = centralizer_roots(e8, cw);
    return verdict("centralizer_d4", sub.roots.size() == 24 && sub.type == "D4",
                   std::to_string(sub.roots.size()) + " roots, type " + sub.type);
  });
  c.push_back([] {
    const RootSystem e8(SystemLabel::E8);
    const auto map = embedding_table(EmbeddingTable::A1C4_in_E8);
    std::vector<IVec> cw;
    for (const auto& r : map.rows)
      if (r.component == 1) cw.push_back(r.image);
    const auto sub = centralizer_roots(e8, cw);
    const std::set<IVec> got(sub.simple.begin(), sub.simple.end());
    const auto table = c4_centralizer_table();
    const std::set<IVec> want(table.begin(), table.end());
    return verdict("centralizer_simple_roots", got == want, "4 tabulated simple roots");
  });
  c.push_back([] {
    const RootSystem e8(SystemLabel::E8);
    const auto map = embedding_table(EmbeddingTable::A1C4_in_E8);
    std::vector<IVec> cw;
    for (const auto& r : map.rows)
      if (r.component == 1) cw.push_back(r.image);
    const auto sub = centralizer_roots(e8, cw);
    const auto phi = c4_centralizer_table();
    IVec combo(8, 0);
    const int coef[] = {1, 2, 1, 1};
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t i = 0; i < 8; ++i) combo[i] += coef[k] * phi[k][i];
    const bool equals_e8_highest = combo == highest_root(e8);
    return verdict("centralizer_highest_root", sub.highest == combo,
                   "phi1+2phi2+phi3+phi4 = " + format_vector(combo) +
                       (equals_e8_highest ? ", equal to" : ", differs from") + " the E8 highest root");
  });
  c.push_back([] {
    const RootSystem e8(SystemLabel::E8);
    const auto phi = c4_centralizer_table();
    IVec top(8, 0);
    const int coef[] = {1, 2, 1, 1};
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t i = 0; i < 8; ++i) top[i] -= coef[k] * phi[k][i];
    const std::vector<IVec> sigma = {top, phi[0], phi[2], phi[3]};
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) ok = ok && e8.pairing(sigma[i], sigma[j]) == 0;
    return verdict("sigma_orthogonal", ok, "{-phi~, phi1, phi3, phi4}");
  });
  c.push_back([] {
    const auto m = rost_multiplier(embedding_table(EmbeddingTable::A1C4_in_E8), 1);
    return verdict("rost_mult_c4", m == 1, m.get_str());
  });
  c.push_back([] {
    const auto m = rost_multiplier(embedding_table(EmbeddingTable::D8_in_E8), 0);
    return verdict("rost_mult_d8", m == 1, m.get_str());
  });
  c.push_back([] {
    const auto m = rost_multiplier(embedding_table(EmbeddingTable::A1C4_in_E8), 0);
    return verdict("rost_mult_a1", m == 4, m.get_str());
  });
  return c;
}

// ------------------------------------------------------------- chevalley

const LieAlgebra& e8_algebra() {
  static const LieAlgebra L(RootSystem(SystemLabel::E8));
  return L;
}

const FormMatrix& e8_reduced() {
  static const FormMatrix m = killing_matrix(e8_algebra(), FormScale::reduced_killing);
  return m;
}

bool root_pairs_equal(const LieAlgebra& L, const QMatrix& gram, const mpq_class& value) {
  for (const auto& r : L.root_system().roots()) {
    IVec neg = r;
    for (auto& x : neg) x = -x;
    if (gram(L.x_index(r), L.x_index(neg)) != value) return false;
  }
  return true;
}

std::vector<Check> chevalley_checks() {
  std::vector<Check> c;
  c.push_back([] {
    const LieAlgebra a1(RootSystem(SystemLabel::A1)), d4(RootSystem(SystemLabel::D4)), d8(RootSystem(SystemLabel::D8));
    const bool ok = a1.dim() == 3 && d4.dim() == 28 && d8.dim() == 120 && e8_algebra().dim() == 248;
    return verdict("lie_dimensions", ok, "A1 3, D4 28, D8 120, E8 248");
  });
  c.push_back([] {
    const LieAlgebra d4(RootSystem(SystemLabel::D4));
    std::size_t bad = 0;
    for (std::size_t a = 0; a < d4.dim(); ++a)
      for (std::size_t b = a + 1; b < d4.dim(); ++b)
        for (std::size_t x = b + 1; x < d4.dim(); ++x)
          if (!jacobiator(d4, a, b, x).empty()) ++bad;
    return verdict("jacobi_d4_exhaustive", bad == 0, std::to_string(bad) + " failing triples");
  });
  c.push_back([] {
    const auto& L = e8_algebra();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, L.dim() - 1);
    std::size_t bad = 0;
    const std::size_t samples = 20000;
    for (std::size_t s = 0; s < samples; ++s)
      if (!jacobiator(L, pick(rng), pick(rng), pick(rng)).empty()) ++bad;
    return verdict("jacobi_e8_sampled", bad == 0, std::to_string(samples) + " triples, " + std::to_string(bad) + " failing");
  });
  c.push_back([] {
    const auto k = killing_matrix(e8_algebra(), FormScale::killing);
    return verdict("killing_e8_root_pairs", root_pairs_equal(e8_algebra(), k.gram, 60), "(X_a, X_-a) = 60");
  });
  c.push_back([] {
    return verdict("killing_e8_reduced_root_pairs", root_pairs_equal(e8_algebra(), e8_reduced().gram, 1),
                   "reduced (X_a, X_-a) = 1");
  });
  c.push_back([] {
    const LieAlgebra d8(RootSystem(SystemLabel::D8));
    const auto k = killing_matrix(d8, FormScale::killing);
    return verdict("killing_d8_root_pairs", root_pairs_equal(d8, k.gram, 28), "(X_a, X_-a) = 28, h = 14");
  });
  c.push_back([] {
    const QForm w = cartan_restriction_witt(e8_algebra());
    return verdict("cartan_restriction_e8", witt_equal(w, multiple(QForm(Field::Q, {1}), 8)), to_string(w));
  });
  c.push_back([] {
    std::vector<std::size_t> all(248);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const QForm full = restricted_form(e8_reduced().gram, all);
    const auto wd = witt_decompose(full);
    return verdict("full_redkill_e8", witt_equal(full, multiple(QForm(Field::Q, {1}), 8)),
                   "Witt index " + std::to_string(wd.witt_index));
  });
  c.push_back([] {
    const auto rep = branching_check(e8_algebra(), embedding_table(EmbeddingTable::D8_in_E8), e8_reduced());
    const E8Input split = E8Input::make(Field::Q, {{{1, 1}, {1, 1}, {1, 1}, {1, 1}}}, 1);
    const bool ok = rep.subalg_dim == 120 && rep.complement_dim == 128 && rep.roots_mapped && rep.cross_block_zero &&
                    witt_equal(rep.complement_witt, d8_half_spin_form(split, 1, 1)) &&
                    witt_equal(rep.subalg_witt + rep.complement_witt, multiple(QForm(Field::Q, {1}), 8));
    return verdict("branching_d8", ok,
                   "dims (" + std::to_string(rep.subalg_dim) + ", " + std::to_string(rep.complement_dim) + "), cross block " +
                       (rep.cross_block_zero ? "zero" : "nonzero"));
  });
  return c;
}

// ----------------------------------------------------------------- qform

std::vector<Check> qform_checks() {
  std::vector<Check> c;
  c.push_back([] {
    const auto b = brauer_class(Quaternion(Field::Q, -1, -1));
    const std::array<Quaternion, 2> twice{Quaternion(Field::Q, -1, -1), Quaternion(Field::Q, -1, -1)};
    const bool ok = b.str() == BrauerClass2({Place::prime(2), Place::infinity()}).str() && brauer_sum(twice).is_split() &&
                    brauer_class(Quaternion(Field::Q, 1, 7)).is_split();
    return verdict("hamilton_ramification", ok, b.str());
  });
  c.push_back([] {
    const auto inv = invariants(QForm(Field::Q, {1, 1, 1, 1}));
    const auto norm = quaternion_forms(Quaternion(Field::Q, -1, -1)).norm;
    const bool ok = inv.signature == 4 && inv.disc == 1 && inv.clifford == brauer_class(Quaternion(Field::Q, -1, -1)) &&
                    invariants(norm) == inv;
    return verdict("norm_form_clifford", ok, inv.clifford.str());
  });
  c.push_back([] {
    const auto inv = invariants(pfister(Field::Q, {-1, -1, -1}));
    return verdict("pfister3_invariants", inv.dim == 8 && inv.signature == 8 && inv.disc == 1 && inv.clifford.is_split());
  });
  c.push_back([] {
    const QForm q(Field::Q, {1, 1, 1, 1, 1, -7});
    const auto wd = witt_decompose(q);
    const bool ok = is_isotropic(q) && !is_isotropic(QForm(Field::Q, {1, 1, 1, 1})) && wd.witt_index == 1 &&
                    wd.kernel.dim == 4 && wd.kernel.signature == 4;
    return verdict("isotropy_examples", ok, "witt index " + std::to_string(wd.witt_index));
  });
  c.push_back([] {
    const QForm one(Field::Q, {1});
    const bool ok = witt_equal(QForm(Field::Q, {2, 2}), QForm(Field::Q, {1, 1})) &&
                    !witt_equal(QForm(Field::Q, {1, 1}), QForm(Field::Q, {1, -1})) &&
                    witt_equal(multiple(QForm(Field::Q, {2}), 8), multiple(one, 8)) &&
                    witt_equal(multiple(QForm(Field::Q, {3}), 4), multiple(one, 4));
    return verdict("witt_equal_examples", ok);
  });
  c.push_back([] {
    const QForm one(Field::R, {1});
    const int l32 = i_level(multiple(one, 32)), l256 = i_level(multiple(one, 256));
    return verdict("real_i_levels", l32 == 5 && l256 == 8, "32 -> " + std::to_string(l32) + ", 256 -> " + std::to_string(l256));
  });
  c.push_back([] {
    const QForm p = pfister(Field::Q, {-1, -1, -1});
    const bool ok = in_In(p, 3) && !e3_zero(p) && e3_symbol_length(p) == 1 && e3_zero(multiple(p, 2)) &&
                    e3_symbol_length(multiple(p, 2)) == 0;
    return verdict("arason_examples", ok);
  });
  c.push_back([] {
    // Twelve-dimensional I^3 forms: (Witt index, symbol length) must be a
    // realizable row over Q, (2,1) or (6,0).
    const QForm a = pfister(Field::Q, {-1}) * (QForm(Field::Q, {1, 1, 1}) + QForm(Field::Q, {-1, -3, -3}));
    const QForm b = pfister(Field::Q, {-1, -1, -1}) + hyperbolic(Field::Q, 2);
    std::string details;
    bool ok = true;
    for (const QForm* q : {&a, &b}) {
      const int index = witt_decompose(*q).witt_index, len = e3_symbol_length(*q);
      ok = ok && q->dim() == 12 && in_In(*q, 3) && ((index == 2 && len == 1) || (index == 6 && len == 0));
      details += (details.empty() ? "" : ", ") + std::string("(") + std::to_string(index) + "," + std::to_string(len) + ")";
    }
    return verdict("spin12_rows", ok, details);
  });
  return c;
}

// --------------------------------------------------------------- descent

std::vector<Check> descent_checks() {
  std::vector<Check> c;
  c.push_back([] {
    const auto rep = kronecker_iso(2000, 3);
    return verdict("kronecker_iso", rep.ok(), std::to_string(rep.checked) + " checks");
  });
  c.push_back([] {
    const auto rep = conjugation_iso();
    return verdict("conjugation_iso", rep.ok(), std::to_string(rep.checked) + " matrix units");
  });
  c.push_back([] {
    const auto rep = composite_multiplicativity(2000, 5);
    return verdict("composite_multiplicative", rep.ok(), std::to_string(rep.checked) + " products");
  });
  c.push_back([] {
    const QMatrix img = sl2_image();
    return verdict("sl2_image", img == sl2_image_expected() && (img * img).is_zero(), "matches the displayed matrix");
  });
  c.push_back([] {
    const QMatrix img = sl2_image();
    const bool skew = (sigma_involution(8).apply(img) + img).is_zero();
    return CheckResult{"sl2_sigma_skew", CheckStatus::pass, std::string("sigma16(image) + image ") + (skew ? "= 0" : "!= 0")};
  });
  c.push_back([] {
    const QForm f = descent_form(plane_cocycle(5, 3), antidiagonal_ones(2));
    const QForm want = scale(QForm(Field::Q, {1, -5}), 6);
    return verdict("descent_quad_example", witt_equal(f, want) && invariants(f) == invariants(want), to_string(f));
  });
  c.push_back([] {
    std::mt19937_64 rng(11);
    std::size_t bad = 0, tried = 0;
    while (tried < 40) {
      const std::int64_t a = random_entry(rng), cc = random_entry(rng);
      if (square_class(Field::Q, a) == 1) continue;
      ++tried;
      const QForm f = descent_form(plane_cocycle(a, cc), antidiagonal_ones(2));
      if (!witt_equal(f, scale(QForm(Field::Q, {1, -a}), 2 * cc))) ++bad;
    }
    return verdict("descent_quad_random", bad == 0, std::to_string(tried) + " pairs, " + std::to_string(bad) + " failing");
  });
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {5, 7}}) {
    c.push_back([a, b] {
      const auto rep = crux_form(a, b);
      const bool ok = rep.witt_index == 4 && rep.preserves_planes && rep.orthogonal && rep.involutive &&
                      witt_equal(rep.form, crux_expected(a, b)) && witt_equal(rep.whole_form, rep.form);
      return verdict("crux_" + std::to_string(a) + "_" + std::to_string(b), ok,
                     "witt index " + std::to_string(rep.witt_index) + ", " + to_string(rep.form));
    });
  }
  return c;
}

// ---------------------------------------------------------------- e8kill

std::vector<Check> e8kill_checks() {
  std::vector<Check> c;
  c.push_back([] {
    bool ok = true;
    for (unsigned mask = 0; mask < 16; ++mask) {
      const auto rep = killing_report(real_input(mask, 1));
      // With every slot nonsplit there is no isotropy hint to go on.
      const IndexHint hint = mask == 15 ? IndexHint::undetermined : IndexHint::split;
      ok = ok && rep.signature == 8 && rep.real_class == RealClass::split && rep.index_hint == hint;
    }
    return verdict("real_signature_c_square", ok, "16 patterns with c = 1");
  });
  const int expected[] = {8, -24, 8, -24, -248};
  for (int row = 0; row <= 4; ++row) {
    c.push_back([row, want = expected[row]] {
      std::string details;
      bool ok = true;
      for (unsigned mask = 0; mask < 16; ++mask) {
        if (std::popcount(mask) != row) continue;
        const int sig = killing_report(real_input(mask, -1)).signature;
        ok = ok && sig == want;
        details = "signature " + std::to_string(sig);
      }
      return verdict("real_signature_row_" + std::to_string(row), ok, details);
    });
  }
  c.push_back([] {
    const QForm one(Field::R, {1});
    const auto split = killing_report(real_input(0, -1));
    const auto minus24 = killing_report(real_input(1, -1));
    const auto compact = killing_report(real_input(15, -1));
    const bool ok = is_hyperbolic(split.kappa) && witt_equal(minus24.kappa, multiple(one, 32)) &&
                    minus24.kappa_i_level == 5 && witt_equal(compact.kappa, multiple(one, 256)) &&
                    compact.kappa_i_level == 8 && compact.real_class == RealClass::compact &&
                    minus24.real_class == RealClass::e8_minus24;
    return verdict("real_kappa_classes", ok,
                   "levels " + std::to_string(minus24.kappa_i_level) + ", " + std::to_string(compact.kappa_i_level));
  });
  c.push_back([] {
    std::mt19937_64 rng(13);
    std::size_t bad = 0;
    const std::size_t n = 60;
    for (std::size_t i = 0; i < n; ++i) {
      const auto rep = killing_report(random_q_input(rng));
      if (!rep.kappa_consistent || !rep.kappa_in_i5 || rep.redkill.dim() != 248) ++bad;
    }
    return verdict("kappa_formula_consistency", bad == 0, std::to_string(n) + " inputs, " + std::to_string(bad) + " failing");
  });
  c.push_back([] {
    const E8Input in = E8Input::make(Field::Q, {{{-1, -1}, {-1, -3}, {-1, -1}, {-1, -3}}}, -1);
    const auto rep = vanishing_rost_check(in);
    const auto n1 = quaternion_forms(in.q[0]).norm, n2 = quaternion_forms(in.q[1]).norm;
    const bool closed = witt_equal(kappa(in), 8 * (pfister(Field::Q, {-1}) * n1 * n2));
    return verdict("vanishing_rost_main", rep.identities_hold() && closed,
                   "kappa level " + std::to_string(rep.kappa_level));
  });
  c.push_back([] {
    const E8Input in = E8Input::make(Field::Q, {{{-1, -1}, {-1, -3}, {-1, -1}, {-1, -3}}}, -1);
    const auto rep = vanishing_rost_check(in);
    return CheckResult{"vanishing_rost_scalar", rep.scalar_status,
            rep.scalar ? "m = " + std::to_string(*rep.scalar) : std::string("no scalar found among candidates")};
  });
  c.push_back([] {
    TitsInput t;
    t.gamma3 = {-1, -1, -1};
    t.phi3 = {-1, -1, -1};
    t.phi5 = {-1, -1, -1, -1, -1};
    const auto rep = tits_construction(t);
    const QForm want = 8 * pfister(Field::Q, {-1, -1, -1, -1, -1});
    return verdict("tits_kappa_8phi5", witt_equal(rep.kappa, want) && i_level(rep.kappa) == 8 && rep.rost15_zero,
                   "level " + std::to_string(i_level(rep.kappa)));
  });
  c.push_back([] {
    TitsInput t;
    t.field = Field::R;
    t.gamma3 = {-1, -1, -1};
    t.phi3 = {-1, -1, -1};
    t.phi5 = {-1, -1, -1, -1, -1};
    const auto rep = tits_construction(t);
    const int sig = rep.redkill.positive_count() - rep.redkill.negative_count();
    return verdict("tits_compact_signature", sig == -248, "signature " + std::to_string(sig));
  });
  c.push_back([] {
    TitsInput t;
    return verdict("tits_split_hyperbolic", is_hyperbolic(tits_construction(t).kappa));
  });
  c.push_back([] {
    const auto a = example_pf4(Field::Q, {-1, -1}, {-1, -1});
    const auto b = example_pf4(Field::Q, {-1, -1}, {-1, -3});
    const auto s = example_pf4(Field::Q, {1, 1}, {-1, -3});
    const bool ok = a.matches && b.matches && s.matches && is_hyperbolic(s.half_spin) &&
                    witt_equal(a.half_spin, multiple(QForm(Field::Q, {1}), 128));
    return verdict("half_spin_pf4", ok);
  });
  c.push_back([] {
    const auto minus24 = classify(real_input(1, -1));
    const auto compact = classify(real_input(15, -1));
    const bool ok = classify(real_input(7, 1)).index_hint == IndexHint::split &&
                    minus24.index_hint == IndexHint::rank4_d4_kernel && compact.index_hint == IndexHint::undetermined;
    return verdict("index_hints", ok,
                   std::string(to_string(minus24.index_hint)) + ", " + std::string(to_string(compact.index_hint)));
  });
  return c;
}

// -------------------------------------------------------------- appendix

std::vector<Check> appendix_checks() {
  std::vector<Check> c;
  c.push_back([] {
    const bool ok = pgl_gen_function(2, 8) == IntSeries(8, {1, 1, 1, 1}) && cyclo_quotient(3, 1, 8) == IntSeries(8, {1, 0, 0, 1}) &&
                    cyclo_quotient(1, 2, 8) == IntSeries(8, {1, 1, 1, 1});
    return verdict("series_examples", ok);
  });
  for (int s = 2; s <= 4; ++s) {
    for (int reading = 0; reading < 2; ++reading) {
      c.push_back([s, reading] {
        const int r = reading == 0 ? entries_from_half_s(s) : entries_from_degree(s);
        const auto res = search_equality(s, r, 2 << s);
        bool has_top = false;
        for (const auto& j : res.solutions) {
          bool rest_zero = true;
          for (std::size_t i = 1; i < j.size(); ++i) rest_zero = rest_zero && j[i] == 0;
          has_top = has_top || (j[0] == s && rest_zero);
        }
        return verdict("appendix_s" + std::to_string(s) + (reading == 0 ? "_r_half" : "_r_quarter"),
                       res.all_j1_at_least_s && has_top,
                       "r = " + std::to_string(r) + ", " + std::to_string(res.solutions.size()) + " solutions");
      });
    }
  }
  c.push_back([] {
    bool ok = true;
    for (int deg : {8, 16, 32}) {
      const auto p = hspin_params(deg, deg);
      ok = ok && p.odd_cofactor && p.k1_is_s_minus_1 && p.r == deg / 4;
    }
    const auto even = hspin_params(16, 4);
    ok = ok && !even.odd_cofactor && !even.k1_is_s_minus_1 && even.k[0] == 3;
    return verdict("hspin_params", ok);
  });
  c.push_back([] {
    // Agreement through t^3 with r >= 2 forces j1 >= 2 and j2 = 0.
    bool ok = true;
    for (int s = 2; s <= 4; ++s) {
      for (int r = 2; r <= 4; ++r) {
        std::vector<int> j(static_cast<std::size_t>(r), 0);
        while (true) {
          if (matches_through_cubic(j, s)) ok = ok && j[0] >= 2 && j[1] == 0;
          std::size_t pos = 0;
          while (pos < j.size() && j[pos] == s) j[pos++] = 0;
          if (pos == j.size()) break;
          ++j[pos];
        }
      }
    }
    return verdict("coefficient_trace", ok);
  });
  return c;
}

std::vector<Check> checks_for(std::string_view suite) {
  if (suite == "roots") return roots_checks();
  if (suite == "chevalley") return chevalley_checks();
  if (suite == "qform") return qform_checks();
  if (suite == "descent") return descent_checks();
  if (suite == "e8kill") return e8kill_checks();
  if (suite == "appendix") return appendix_checks();
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

CheckResult run_guarded(const Check& check, std::size_t index, std::string_view suite) {
  try {
    return check();
  } catch (const std::exception& e) {
    return {std::string(suite) + "_check_" + std::to_string(index), CheckStatus::fail, std::string("exception: ") + e.what()};
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"roots", "chevalley", "qform", "descent", "e8kill", "appendix"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    checks_for(suite);
    suites.emplace_back(suite);
  }
  std::vector<std::pair<std::string, Check>> jobs;
  for (const auto& s : suites)
    for (auto& check : checks_for(s)) jobs.emplace_back(s, std::move(check));

  // Results land in their own slot so the output order never depends on scheduling.
  std::vector<CheckResult> results(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) results[i] = run_guarded(jobs[i].second, static_cast<std::size_t>(i), jobs[i].first);
  return results;
}

CheckTally tally(const std::vector<CheckResult>& results) {
  CheckTally t;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::pass: ++t.pass; break;
      case CheckStatus::fail: ++t.fail; break;
      case CheckStatus::not_witnessed: ++t.not_witnessed; break;
      case CheckStatus::skipped: ++t.skipped; break;
    }
  }
  return t;
}

}  // namespace e8kit

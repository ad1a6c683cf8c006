// Runs the eleven acceptance criteria, one line per criterion, with timing.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "e8kit/chevalley.hpp"
#include "e8kit/descent.hpp"
#include "e8kit/e8kill.hpp"
#include "e8kit/jinv.hpp"
#include "e8kit/rootsys.hpp"
#include "oracles.hpp"

using namespace e8kit;

namespace {

using Slots = std::array<std::pair<std::int64_t, std::int64_t>, 4>;

struct Outcome {
  bool ok = true;
  std::string details;
};

E8Input real_input(unsigned mask, std::int64_t c) {
  Slots s;
  for (unsigned i = 0; i < 4; ++i)
    s[i] = (mask >> i & 1u) ? std::pair<std::int64_t, std::int64_t>{-1, -1} : std::pair<std::int64_t, std::int64_t>{1, 1};
  return E8Input::make(Field::R, s, c);
}

std::int64_t nonzero(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  std::int64_t v = 0;
  while (v == 0) v = d(rng);
  return v;
}

Slots random_slots(std::mt19937_64& rng) {
  Slots s;
  for (auto& x : s) x = {nonzero(rng, -20, 20), nonzero(rng, -20, 20)};
  return s;
}

const QForm& one_r() {
  static const QForm q(Field::R, {1});
  return q;
}

Outcome real_signatures() {
  Outcome o;
  int checked = 0;
  for (std::int64_t c : {1, -1}) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      const int k = std::popcount(mask);
      const int want = c == 1 ? 8 : (k == 4 ? -248 : (k % 2 == 1 ? -24 : 8));
      const int got = killing_report(real_input(mask, c)).signature;
      o.ok = o.ok && got == want;
      ++checked;
    }
  }
  o.details = std::to_string(checked) + " patterns";
  return o;
}

Outcome real_kappa() {
  Outcome o;
  int counts[3] = {0, 0, 0};
  for (std::int64_t c : {1, -1}) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      const auto rep = killing_report(real_input(mask, c));
      switch (rep.real_class) {
        case RealClass::split:
          o.ok = o.ok && is_hyperbolic(rep.kappa);
          ++counts[0];
          break;
        case RealClass::e8_minus24:
          o.ok = o.ok && witt_equal(rep.kappa, multiple(one_r(), 32)) && rep.kappa_i_level == 5;
          ++counts[1];
          break;
        case RealClass::compact:
          o.ok = o.ok && witt_equal(rep.kappa, multiple(one_r(), 256)) && rep.kappa_i_level == 8;
          ++counts[2];
          break;
        default:
          o.ok = false;
      }
    }
  }
  o.ok = o.ok && counts[0] > 0 && counts[1] > 0 && counts[2] > 0;
  o.details = "split " + std::to_string(counts[0]) + ", -24 " + std::to_string(counts[1]) + ", compact " +
              std::to_string(counts[2]);
  return o;
}

Outcome split_killing() {
  Outcome o;
  const LieAlgebra e8(RootSystem(SystemLabel::E8));
  const auto k = killing_matrix(e8, FormScale::killing);
  std::size_t good = 0;
  for (const auto& r : e8.root_system().roots()) {
    IVec n = r;
    for (auto& x : n) x = -x;
    if (k.gram(e8.x_index(r), e8.x_index(n)) == 60) ++good;
  }
  const QForm eight = multiple(QForm(Field::Q, {1}), 8);
  const QForm cartan = cartan_restriction_witt(e8);
  const E8Input split = E8Input::make(Field::Q, {{{1, 1}, {1, 1}, {1, 1}, {1, 1}}}, 1);
  const auto reduced = killing_matrix(e8, FormScale::reduced_killing);
  std::vector<std::size_t> all(e8.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const QForm full = restricted_form(reduced.gram, all);
  o.ok = good == 240 && witt_equal(cartan, eight) && witt_equal(red_killing_form(split), cartan) && witt_equal(full, cartan);
  o.details = std::to_string(good) + "/240 root pairs at 60, Cartan restriction " + to_string(cartan);
  return o;
}

Outcome branching() {
  Outcome o;
  const LieAlgebra e8(RootSystem(SystemLabel::E8));
  const auto rep = branching_check(e8, embedding_table(EmbeddingTable::D8_in_E8));
  const E8Input split = E8Input::make(Field::Q, {{{1, 1}, {1, 1}, {1, 1}, {1, 1}}}, 1);
  o.ok = rep.subalg_dim == 120 && rep.complement_dim == 128 && rep.roots_mapped && rep.cross_block_zero &&
         witt_equal(rep.complement_witt, d8_half_spin_form(split, 1, 1));
  o.details = "dims (" + std::to_string(rep.subalg_dim) + ", " + std::to_string(rep.complement_dim) + "), cross block " +
              (rep.cross_block_zero ? "zero" : "nonzero") + ", complement Witt index " +
              std::to_string(witt_decompose(rep.complement_witt).witt_index);
  return o;
}

Outcome embeddings() {
  Outcome o;
  std::size_t mismatches = 0;
  for (auto t : {EmbeddingTable::D8_in_E8, EmbeddingTable::A1C4_in_D8, EmbeddingTable::A1C4_in_E8,
                 EmbeddingTable::PGL2x4_in_E8}) {
    const auto rep = verify_embedding(embedding_table(t));
    mismatches += rep.mismatches() + rep.bad_images.size();
  }
  const RootSystem e8(SystemLabel::E8);
  std::vector<IVec> cw;
  const auto a1c4 = embedding_table(EmbeddingTable::A1C4_in_E8);
  for (const auto& r : a1c4.rows)
    if (r.component == 1) cw.push_back(r.image);
  const auto sub = centralizer_roots(e8, cw);
  const auto table = c4_centralizer_table();
  const bool tabulated = std::set<IVec>(sub.simple.begin(), sub.simple.end()) == std::set<IVec>(table.begin(), table.end());
  const auto rc4 = rost_multiplier(a1c4, 1);
  const auto rd8 = rost_multiplier(embedding_table(EmbeddingTable::D8_in_E8), 0);
  o.ok = mismatches == 0 && tabulated && sub.roots.size() == 24 && sub.type == "D4" && rc4 == 1 && rd8 == 1;
  o.details = std::to_string(mismatches) + " mismatches, centralizer " + std::to_string(sub.roots.size()) + " roots " +
              sub.type + ", multipliers " + rc4.get_str() + "/" + rd8.get_str();
  return o;
}

Outcome descent() {
  Outcome o;
  std::mt19937_64 rng(601);
  int forms = 0, bad_forms = 0;
  while (forms < 100) {
    const auto a = nonzero(rng, -50, 50), c = nonzero(rng, -50, 50);
    if (square_class(Field::Q, a) == 1) continue;
    ++forms;
    if (!witt_equal(descent_form(plane_cocycle(a, c), antidiagonal_ones(2)), scale(QForm(Field::Q, {1, -a}), 2 * c)))
      ++bad_forms;
  }
  int crux = 0, bad_crux = 0;
  while (crux < 50) {
    const auto a = nonzero(rng, -50, 50), b = nonzero(rng, -50, 50);
    if (square_class(Field::Q, a) == 1) continue;
    ++crux;
    if (crux_form(a, b).witt_index != 4) ++bad_crux;
  }
  const bool sl2 = sl2_image() == sl2_image_expected();
  o.ok = bad_forms == 0 && bad_crux == 0 && sl2;
  o.details = std::to_string(bad_forms) + "/100 descent and " + std::to_string(bad_crux) + "/50 crux failures, sl2 image " +
              (sl2 ? "matches" : "differs");
  return o;
}

Outcome witt_property_suite() {
  Outcome o;
  std::mt19937_64 rng(701);
  std::vector<std::pair<Slots, std::int64_t>> inputs;
  for (int i = 0; i < 200; ++i) inputs.emplace_back(random_slots(rng), nonzero(rng, -20, 20));
  std::vector<int> failures(inputs.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto [slots, c] = inputs[i];
    const E8Input in = E8Input::make(Field::Q, slots, c);
    const QForm k = kappa(in);
    bool ok = in_In(k, 5) && in_In(k, 4) && witt_equal(k, kappa_from_redkill(red_killing_form(in)));
    std::array<int, 4> perm{0, 1, 2, 3};
    while (ok && std::next_permutation(perm.begin(), perm.end())) {
      Slots p;
      for (int j = 0; j < 4; ++j) p[j] = slots[perm[j]];
      ok = witt_equal(kappa(E8Input::make(Field::Q, p, c)), k);
    }
    failures[i] = ok ? 0 : 1;
  }
  const int bad = std::count(failures.begin(), failures.end(), 1);
  o.ok = bad == 0;
  o.details = std::to_string(bad) + "/200 inputs failing (I^5, I^4, kappa formula, 24 permutations)";
  return o;
}

Outcome vanishing_rost() {
  Outcome o;
  std::mt19937_64 rng(801);
  std::vector<E8Input> inputs;
  for (int i = 0; i < 100; ++i) {
    Slots s = random_slots(rng);
    switch (i % 4) {
      case 0: s[2] = s[0]; s[3] = s[1]; break;
      case 1: s[1] = s[0]; s[3] = s[2]; break;
      case 2: s[3] = s[0]; s[2] = s[1]; break;
      default: s[1] = s[0]; s[2] = s[0]; s[3] = s[0]; break;
    }
    inputs.push_back(E8Input::make(Field::Q, s, nonzero(rng, -20, 20)));
  }
  std::vector<int> bad(inputs.size(), 0), unwitnessed(inputs.size(), 0), failed_scalar(inputs.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& in = inputs[i];
    const auto rep = vanishing_rost_check(in);
    const auto n1 = quaternion_forms(in.q[0]).norm, n2 = quaternion_forms(in.q[1]).norm,
               n4 = quaternion_forms(in.q[3]).norm;
    const bool main = witt_equal(kappa(in), 2 * (pfister(Field::Q, {in.c}) * n1 * n2 * n4));
    bad[i] = (rep.main_identity && main && rep.kappa_level >= 8 && rep.subset_symmetry) ? 0 : 1;
    unwitnessed[i] = rep.scalar_status == CheckStatus::not_witnessed;
    failed_scalar[i] = rep.scalar_status == CheckStatus::fail;
  }
  const int b = std::count(bad.begin(), bad.end(), 1);
  const int nw = std::count(unwitnessed.begin(), unwitnessed.end(), 1);
  const int fs = std::count(failed_scalar.begin(), failed_scalar.end(), 1);
  o.ok = b == 0 && fs == 0 && nw * 10 < 100;
  o.details = std::to_string(b) + "/100 failing main identities, scalar not_witnessed " + std::to_string(nw) +
              "/100 (target < 10), scalar fail " + std::to_string(fs);
  return o;
}

Outcome tits() {
  Outcome o;
  TitsInput t;
  t.gamma3 = {-1, -1, -1};
  t.phi3 = {-1, -1, -1};
  t.phi5 = {-1, -1, -1, -1, -1};
  const auto rep = tits_construction(t);
  const bool k8 = witt_equal(rep.kappa, 8 * pfister(Field::Q, {-1, -1, -1, -1, -1}));
  t.field = Field::R;
  const auto real = tits_construction(t);
  const int sig = real.redkill.positive_count() - real.redkill.negative_count();
  o.ok = k8 && rep.rost15_zero && sig == -248;
  o.details = std::string("kappa = 8 phi5 ") + (k8 ? "holds" : "fails") + ", rost15 " +
              (rep.rost15_zero ? "zero" : "nonzero") + ", real signature " + std::to_string(sig);
  return o;
}

Outcome appendix() {
  Outcome o;
  std::ostringstream d;
  for (int s = 2; s <= 4; ++s) {
    for (int r : {entries_from_half_s(s), entries_from_degree(s)}) {
      const auto res = search_equality(s, r, 2 << s);
      const auto ser = search_equality_serial(s, r, 2 << s);
      bool top = false;
      for (const auto& j : res.solutions) {
        bool rest = true;
        for (std::size_t i = 1; i < j.size(); ++i) rest = rest && j[i] == 0;
        top = top || (j[0] == s && rest);
      }
      o.ok = o.ok && res.all_j1_at_least_s && top && res.solutions == ser.solutions;
      d << "s" << s << "/r" << r << ":" << res.solutions.size() << " ";
    }
  }
  for (int deg : {8, 16, 32}) {
    const auto p = hspin_params(deg, deg);
    o.ok = o.ok && p.odd_cofactor && p.k1_is_s_minus_1 && p.k[0] == p.s - 1;
  }
  o.details = d.str() + "solutions; k1 = s - 1 at degrees 8, 16, 32";
  return o;
}

Outcome qform_oracle() {
  Outcome o;
  std::mt19937_64 rng(1101);
  std::vector<std::vector<std::int64_t>> forms;
  for (int i = 0; i < 500; ++i) {
    const int dim = 1 + static_cast<int>(rng() % 6);
    std::vector<std::int64_t> e;
    for (int k = 0; k < dim; ++k) e.push_back(nonzero(rng, -30, 30));
    forms.push_back(e);
  }
  std::vector<int> disagree(forms.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(forms.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto wd = witt_decompose(QForm(Field::Q, forms[i]));
    const auto brute = oracle::witt_index_search(forms[i], 50);
    disagree[i] = (wd.witt_index != brute.witt_index || wd.kernel.dim != brute.kernel_dim) ? 1 : 0;
  }
  const int bad = std::count(disagree.begin(), disagree.end(), 1);
  o.ok = bad == 0;
  o.details = std::to_string(bad) + "/500 disagreements";
  for (std::size_t i = 0; i < forms.size() && bad > 0; ++i)
    if (disagree[i]) {
      o.details += ", first " + to_string(QForm(Field::Q, forms[i]));
      break;
    }
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "real signature table", 1, real_signatures},
      {2, "real kappa table", 1, real_kappa},
      {3, "split E8 reduced Killing form", 60, split_killing},
      {4, "D8 branching", 120, branching},
      {5, "embedding tables and centralizer", 5, embeddings},
      {6, "descent computations", 10, descent},
      {7, "kappa property suite", 60, witt_property_suite},
      {8, "vanishing Rost class", 60, vanishing_rost},
      {9, "Tits construction", 5, tits},
      {10, "appendix search", 30, appendix},
      {11, "qform oracle equivalence", 120, qform_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s  %2d  %-34s %8.3f s (limit %g s)%s  %s\n", pass ? "PASS" : "FAIL", c.number, c.name, secs,
                c.limit_seconds, in_time ? "" : " TIMEOUT", out.details.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

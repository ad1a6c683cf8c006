#include "e8kit/e8kill.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "e8kit/numtheory.hpp"

namespace e8kit {

E8Input E8Input::make(Field field, const std::array<std::pair<std::int64_t, std::int64_t>, 4>& slots,
                      std::int64_t c) {
  if (c == 0) throw std::invalid_argument("zero scalar c");
  E8Input in;
  in.field = field;
  for (std::size_t i = 0; i < 4; ++i) in.q[i] = Quaternion(field, slots[i].first, slots[i].second);
  in.c = square_class(field, c);
  return in;
}

namespace {

void require_field(const E8Input& in) {
  for (const auto& q : in.q)
    if (q.field() != in.field) throw FieldMismatch("E8Input: quaternion over a different field");
}

QForm unit_form(Field f, std::int64_t a) { return QForm(f, {a}); }

QForm scaled(const QForm& q, std::int64_t a, std::int64_t b) { return scale(scale(q, a), b); }

struct Parts {
  std::array<QForm, 4> norm{QForm(Field::Q), QForm(Field::Q), QForm(Field::Q), QForm(Field::Q)};
  std::array<QForm, 4> pure{QForm(Field::Q), QForm(Field::Q), QForm(Field::Q), QForm(Field::Q)};
};

Parts parts(const E8Input& in) {
  require_field(in);
  Parts p;
  for (std::size_t i = 0; i < 4; ++i) {
    auto f = quaternion_forms(in.q[i]);
    p.norm[i] = std::move(f.norm);
    p.pure[i] = std::move(f.pure);
  }
  return p;
}

QForm sum_of(const std::array<QForm, 4>& xs) { return xs[0] + xs[1] + xs[2] + xs[3]; }

QForm pair_products(const std::array<QForm, 4>& xs) {
  QForm s(xs[0].field());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) s = s + xs[i] * xs[j];
  return s;
}

QForm triple_products(const std::array<QForm, 4>& xs) {
  QForm s(xs[0].field());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t l = j + 1; l < 4; ++l) s = s + xs[i] * xs[j] * xs[l];
  return s;
}

}  // namespace

QForm red_killing_form(const E8Input& in) {
  const Field f = in.field;
  const auto p = parts(in);
  const QForm inner = sum_of(p.pure) + triple_products(p.pure);
  const QForm eight = multiple(scaled(unit_form(f, 1), 2, in.c), 8);
  return eight + negate(unit_form(f, 2) * pfister(f, {in.c}) * inner);
}

QForm kappa(const E8Input& in) {
  const Field f = in.field;
  const auto p = parts(in);
  const QForm inner = multiple(sum_of(p.norm), 4) + multiple(pair_products(p.norm), -2) + triple_products(p.norm);
  return pfister(f, {in.c}) * inner;
}

QForm kappa_from_redkill(const QForm& redkill) {
  const Field f = redkill.field();
  return unit_form(f, 2) * (multiple(unit_form(f, 1), 8) - redkill);
}

RostClass rost_class(const E8Input& in) {
  const auto p = parts(in);
  RostClass rc;
  rc.representative = pfister(in.field, {in.c}) * sum_of(p.norm);
  rc.is_zero = e3_zero(rc.representative);
  return rc;
}

QForm d8_adjoint_form(const E8Input& in) {
  const auto p = parts(in);
  return scale(sum_of(p.pure) + triple_products(p.pure), -2);
}

QForm d8_half_spin_form(const E8Input& in, std::int64_t m2, std::int64_t m4) {
  const Field f = in.field;
  const auto p = parts(in);
  QForm weight4(f);
  for (const auto& n : p.norm) weight4 = weight4 + scale(n, 2) + unit_form(f, 6);
  return scaled(scale(triple_products(p.pure), 2), in.c, m2) + scaled(weight4, in.c, m4);
}

QForm d8_mu_form(const E8Input& in, std::int64_t m2, std::int64_t m4) {
  const Field f = in.field;
  const auto p = parts(in);
  const QForm first = multiple(scaled(QForm(f, {2, 6}), in.c, m4), 4);
  const QForm second = unit_form(f, 2) * QForm(f, {-1, square_class(f, in.c) * m4}) * sum_of(p.pure);
  const QForm third = unit_form(f, 2) * QForm(f, {-1, square_class(f, in.c) * m2}) * triple_products(p.pure);
  return first + second + third;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_witnessed: return "not_witnessed";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

// Square classes to try as the scalar relating the two differences: signed
// products of primes appearing in the input, plus a few small primes.
std::vector<std::int64_t> scalar_candidates(const E8Input& in) {
  if (in.field == Field::R) return {1, -1};
  std::set<std::uint64_t> primes{2, 3, 5, 7};
  auto add = [&](std::int64_t x) {
    if (x != 1 && x != -1)
      for (auto p : nt::prime_support(x)) primes.insert(p);
  };
  for (const auto& q : in.q) {
    add(q.a());
    add(q.b());
  }
  add(in.c);
  std::vector<std::uint64_t> ps(primes.begin(), primes.end());
  if (ps.size() > 10) ps.resize(10);
  std::vector<std::int64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ps.size()); ++mask) {
    __int128 prod = 1;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (mask >> i & 1U) prod *= ps[i];
    if (prod > (static_cast<__int128>(1) << 62)) continue;
    out.push_back(static_cast<std::int64_t>(prod));
    out.push_back(-static_cast<std::int64_t>(prod));
  }
  std::stable_sort(out.begin(), out.end(), [](auto a, auto b) { return std::abs(a) < std::abs(b); });
  return out;
}

}  // namespace

VanishingRostReport vanishing_rost_check(const E8Input& in) {
  if (!rost_class(in).is_zero) throw std::domain_error("vanishing_rost_check: Rost class is nonzero");
  const auto p = parts(in);
  const QForm pc = pfister(in.field, {in.c});
  const auto& n = p.norm;
  const QForm k = kappa(in);

  VanishingRostReport rep;
  rep.main_identity = witt_equal(k, multiple(pc * n[0] * n[1] * n[3], 2));
  rep.kappa_level = i_level(k);
  rep.level_ok = rep.kappa_level >= 8;
  rep.subset_symmetry = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t l = j + 1; l < 4; ++l)
        if (!witt_equal(k, multiple(pc * n[i] * n[j] * n[l], 2))) rep.subset_symmetry = false;

  const QForm d12 = n[0] - n[1];
  const QForm d34 = n[2] - n[3];
  rep.difference_squares = witt_equal(pc * d12 * d12, pc * d34 * d34);
  rep.product_vanishes = is_hyperbolic(pc * n[0] * n[1] * d34);
  rep.square_reduction = witt_equal(pc * n[0] * d34 * d34, multiple(pc * n[0] * d12, 4));

  const QForm lhs = pc * d12;
  const QForm rhs = pc * d34;
  for (auto m : scalar_candidates(in)) {
    if (witt_equal(lhs, scale(rhs, m))) {
      rep.scalar = m;
      rep.scalar_status = CheckStatus::pass;
      break;
    }
  }
  return rep;
}

void TitsInput::validate() const {
  auto nonzero = [](auto const& xs) { return std::none_of(xs.begin(), xs.end(), [](auto x) { return x == 0; }); };
  if (!nonzero(gamma3) || !nonzero(phi3) || !nonzero(phi5)) throw std::invalid_argument("zero symbol entry");
  for (std::size_t i = 0; i < 3; ++i)
    if (square_class(field, phi3[i]) != square_class(field, phi5[i]))
      throw std::invalid_argument("phi3 slots must be a prefix of phi5 slots");
}

namespace {

QForm pure_part(const QForm& pf) {
  auto e = pf.entries();
  const auto it = std::find(e.begin(), e.end(), 1);
  if (it == e.end()) throw std::logic_error("pure_part: no <1> entry");
  e.erase(it);
  return QForm(pf.field(), e);
}

}  // namespace

TitsReport tits_construction(const TitsInput& in) {
  in.validate();
  const Field f = in.field;
  const QForm g3 = pfister(f, in.gamma3);
  const QForm p3 = pfister(f, in.phi3);
  // phi5 = phi3 <<a4, a5>>, so phi5 - phi3 is phi3 times the pure part of
  // <<a4, a5>>, and the eight <1> cancel the leading <1> of each Pfister copy.
  const QForm tail = p3 * pure_part(pfister(f, {in.phi5[3], in.phi5[4]}));
  const QForm inner = multiple(pure_part(g3), 4) + multiple(pure_part(p3), 4) + unit_form(f, 2) * g3 * tail;
  TitsReport rep;
  rep.redkill = scale(inner, -2);
  rep.kappa = kappa_from_redkill(rep.redkill);
  rep.rost15_zero = e3_zero(g3 - p3);
  return rep;
}

std::string_view to_string(RealClass c) {
  switch (c) {
    case RealClass::split: return "split";
    case RealClass::e8_minus24: return "e8_minus24";
    case RealClass::compact: return "compact";
    case RealClass::not_applicable: return "n/a";
  }
  return "?";
}

std::string_view to_string(IndexHint h) {
  switch (h) {
    case IndexHint::split: return "split";
    case IndexHint::rank4_d4_kernel: return "rank4_d4_kernel";
    case IndexHint::rank2_d6_kernel: return "rank2_d6_kernel";
    case IndexHint::undetermined: return "undetermined";
  }
  return "?";
}

RealClass real_class_from_signature(int signature) {
  switch (signature) {
    case 8: return RealClass::split;
    case -24: return RealClass::e8_minus24;
    case -248: return RealClass::compact;
    default: return RealClass::not_applicable;
  }
}

namespace {

IndexHint index_hint(const E8Input& in, const RostClass& rc) {
  std::size_t split = 0;
  for (const auto& q : in.q)
    if (brauer_class(q).is_split()) ++split;
  bool triple_split = false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t l = j + 1; l < 4; ++l) {
        const Quaternion qs[] = {in.q[i], in.q[j], in.q[l]};
        if (brauer_sum(qs).is_split()) triple_split = true;
      }
  if (split >= 1 && rc.is_zero) return IndexHint::split;
  if (split >= 2 || triple_split) {
    switch (e3_symbol_length(rc.representative)) {
      case 0: return IndexHint::split;
      case 1: return IndexHint::rank4_d4_kernel;
      default: return IndexHint::rank2_d6_kernel;
    }
  }
  return IndexHint::undetermined;
}

int signature_of(const QForm& q) { return q.positive_count() - q.negative_count(); }

}  // namespace

Classification classify(const E8Input& in) {
  Classification out;
  if (in.field == Field::R) out.real_class = real_class_from_signature(signature_of(red_killing_form(in)));
  out.index_hint = index_hint(in, rost_class(in));
  return out;
}

KillingReport killing_report(const E8Input& in) {
  KillingReport rep;
  rep.redkill = red_killing_form(in);
  rep.kappa = kappa(in);
  rep.kappa_i_level = i_level(rep.kappa);
  const auto rc = rost_class(in);
  rep.rost_zero = rc.is_zero;
  rep.signature = signature_of(rep.redkill);
  if (in.field == Field::R) rep.real_class = real_class_from_signature(rep.signature);
  rep.index_hint = index_hint(in, rc);
  rep.kappa_consistent = witt_equal(rep.kappa, kappa_from_redkill(rep.redkill));
  rep.kappa_in_i5 = in_In(rep.kappa, 5);
  return rep;
}

Pf4Report example_pf4(Field field, std::array<std::int64_t, 2> q1, std::array<std::int64_t, 2> q2) {
  const auto in = E8Input::make(field, {{{q1[0], q1[1]}, {q2[0], q2[1]}, {q1[0], q1[1]}, {q2[0], q2[1]}}}, 1);
  Pf4Report rep;
  rep.half_spin = d8_half_spin_form(in, 1, 1);
  rep.expected = multiple(pfister(field, {q1[0], q1[1]}) * pfister(field, {q2[0], q2[1]}), 8);
  rep.matches = rep.half_spin.dim() == rep.expected.dim() && witt_equal(rep.half_spin, rep.expected);
  return rep;
}

}  // namespace e8kit

#include "e8kit/qform.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "e8kit/numtheory.hpp"

namespace e8kit {

std::string_view to_string(Field f) { return f == Field::Q ? "Q" : "R"; }

Place Place::prime(std::int64_t p) {
  if (p <= 1 || !nt::is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("Place::prime: " + std::to_string(p) + " is not a prime");
  return Place(static_cast<std::uint64_t>(p));
}

std::string Place::str() const { return is_infinite() ? "inf" : std::to_string(p_); }

int hilbert_symbol(std::int64_t a, std::int64_t b, Place v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const std::uint64_t p = v.prime_value();
  const int alpha = nt::valuation(a, p);
  const int beta = nt::valuation(b, p);
  std::int64_t u = a;
  std::int64_t w = b;
  for (int i = 0; i < alpha; ++i) u /= static_cast<std::int64_t>(p);
  for (int i = 0; i < beta; ++i) w /= static_cast<std::int64_t>(p);
  if (p == 2) {
    auto mod8 = [](std::int64_t x) {
      auto r = x % 8;
      return r < 0 ? r + 8 : r;
    };
    const auto u8 = mod8(u), w8 = mod8(w);
    const int eps_u = ((u8 - 1) / 2) % 2;
    const int eps_w = ((w8 - 1) / 2) % 2;
    const int omega_u = ((u8 * u8 - 1) / 8) % 2;
    const int omega_w = ((w8 * w8 - 1) / 8) % 2;
    const int exponent = eps_u * eps_w + alpha * omega_w + beta * omega_u;
    return exponent % 2 == 0 ? 1 : -1;
  }
  int result = 1;
  if ((alpha * beta) % 2 == 1 && ((p - 1) / 2) % 2 == 1) result = -result;
  if (beta % 2 == 1) result *= nt::legendre(u, p);
  if (alpha % 2 == 1) result *= nt::legendre(w, p);
  return result;
}

BrauerClass2 operator+(const BrauerClass2& a, const BrauerClass2& b) {
  std::set<Place> out;
  std::set_symmetric_difference(a.ramified_.begin(), a.ramified_.end(), b.ramified_.begin(), b.ramified_.end(),
                                std::inserter(out, out.end()));
  return BrauerClass2(std::move(out));
}

std::string BrauerClass2::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& v : ramified_) {
    if (!first) s += ",";
    s += v.str();
    first = false;
  }
  return s + "}";
}

std::int64_t square_class(Field field, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("square_class: zero entry");
  if (field == Field::R) return n > 0 ? 1 : -1;
  return nt::squarefree_part(n);
}

namespace {

std::int64_t class_mul(Field field, std::int64_t a, std::int64_t b) {
  if (field == Field::R) return (a > 0) == (b > 0) ? 1 : -1;
  return nt::squarefree_mul(a, b);
}

void require_same_field(const QForm& a, const QForm& b) {
  if (a.field() != b.field()) throw FieldMismatch("quadratic forms over different base fields");
}

// Critical places for symbols among the given square classes.
std::set<Place> critical_places(Field field, std::span<const std::int64_t> classes) {
  std::set<Place> places{Place::infinity()};
  if (field == Field::R) return places;
  places.insert(Place::prime(2));
  std::set<std::int64_t> seen;
  for (auto x : classes) {
    const auto mag = x < 0 ? -x : x;
    if (mag == 1 || !seen.insert(mag).second) continue;
    for (auto p : nt::prime_support(mag)) places.insert(Place::prime(static_cast<std::int64_t>(p)));
  }
  return places;
}

BrauerClass2 symbol_class(std::int64_t a, std::int64_t b, const std::set<Place>& places) {
  std::set<Place> ram;
  for (const auto& v : places)
    if (hilbert_symbol(a, b, v) == -1) ram.insert(v);
  return BrauerClass2(std::move(ram));
}

// Lam's conversion between the Hasse invariant s(q) and the Witt invariant
// c(q) depends on dim mod 8 and the (unsigned) determinant d.
BrauerClass2 hasse_to_clifford_correction(int dim, std::int64_t det, const std::set<Place>& places) {
  switch (dim % 8) {
    case 1:
    case 2:
      return {};
    case 3:
    case 4:
      return symbol_class(-1, -det, places);
    case 5:
    case 6:
      return symbol_class(-1, -1, places);
    default:
      return symbol_class(-1, det, places);
  }
}

std::int64_t sign_power(int dim) {
  const long pairs = static_cast<long>(dim) * (dim - 1) / 2;
  return pairs % 2 == 0 ? 1 : -1;
}

std::set<Place> places_for(Field field, const WittInvariants& inv) {
  std::set<Place> places{Place::infinity()};
  if (field == Field::R) return places;
  places.insert(Place::prime(2));
  if (inv.disc != 1 && inv.disc != -1)
    for (auto p : nt::prime_support(inv.disc)) places.insert(Place::prime(static_cast<std::int64_t>(p)));
  for (const auto& v : inv.clifford.ramified()) places.insert(v);
  return places;
}

}  // namespace

Quaternion::Quaternion(Field field, std::int64_t a, std::int64_t b)
    : field_(field), a_(0), b_(0) {
  if (a == 0 || b == 0) throw std::invalid_argument("zero symbol entry");
  a_ = square_class(field, a);
  b_ = square_class(field, b);
}

QForm::QForm(Field field, std::span<const std::int64_t> entries) : field_(field) {
  entries_.reserve(entries.size());
  for (auto x : entries) entries_.push_back(square_class(field, x));
}

QForm::QForm(Field field, std::initializer_list<std::int64_t> entries)
    : QForm(field, std::span<const std::int64_t>(entries.begin(), entries.size())) {}

QForm QForm::from_rationals(Field field, std::span<const mpq_class> entries) {
  QForm q(field);
  q.entries_.reserve(entries.size());
  for (const auto& x : entries) {
    if (x == 0) throw std::invalid_argument("QForm: zero diagonal entry");
    q.entries_.push_back(field == Field::R ? (sgn(x) > 0 ? 1 : -1) : nt::squarefree_part(x));
  }
  return q;
}

int QForm::positive_count() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](auto x) { return x > 0; }));
}

int QForm::negative_count() const { return static_cast<int>(dim()) - positive_count(); }

QForm orthogonal_sum(const QForm& a, const QForm& b) {
  require_same_field(a, b);
  std::vector<std::int64_t> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return QForm(a.field(), e);
}

QForm tensor(const QForm& a, const QForm& b) {
  require_same_field(a, b);
  std::vector<std::int64_t> e;
  e.reserve(a.dim() * b.dim());
  for (auto x : a.entries())
    for (auto y : b.entries()) e.push_back(class_mul(a.field(), x, y));
  return QForm(a.field(), e);
}

QForm scale(const QForm& q, std::int64_t s) {
  const auto sc = square_class(q.field(), s);
  std::vector<std::int64_t> e;
  e.reserve(q.dim());
  for (auto x : q.entries()) e.push_back(class_mul(q.field(), x, sc));
  return QForm(q.field(), e);
}

QForm negate(const QForm& q) { return scale(q, -1); }

QForm multiple(const QForm& q, int n) {
  const QForm unit = n < 0 ? negate(q) : q;
  std::vector<std::int64_t> e;
  e.reserve(unit.dim() * static_cast<std::size_t>(std::abs(n)));
  for (int i = 0; i < std::abs(n); ++i) e.insert(e.end(), unit.entries().begin(), unit.entries().end());
  return QForm(q.field(), e);
}

QForm pfister(Field field, std::span<const std::int64_t> slots) {
  QForm result(field, {1});
  for (auto a : slots) {
    if (a == 0) throw std::invalid_argument("pfister: zero slot");
    result = tensor(result, QForm(field, {1, -square_class(field, a)}));
  }
  return result;
}

QForm pfister(Field field, std::initializer_list<std::int64_t> slots) {
  return pfister(field, std::span<const std::int64_t>(slots.begin(), slots.size()));
}

QForm hyperbolic(Field field, int planes) {
  if (planes < 0) throw std::invalid_argument("hyperbolic: negative plane count");
  return multiple(QForm(field, {1, -1}), planes);
}

QuaternionForms quaternion_forms(const Quaternion& q) {
  const Field f = q.field();
  const auto ab = class_mul(f, q.a(), q.b());
  return {QForm(f, {1, -q.a(), -q.b(), ab}), QForm(f, {-q.a(), -q.b(), ab})};
}

BrauerClass2 brauer_class(const Quaternion& q) {
  const std::int64_t slots[] = {q.a(), q.b()};
  return symbol_class(q.a(), q.b(), critical_places(q.field(), slots));
}

BrauerClass2 brauer_sum(std::span<const Quaternion> qs) {
  BrauerClass2 total;
  for (const auto& q : qs) total = total + brauer_class(q);
  return total;
}

BrauerClass2 hasse_invariant(const QForm& q) {
  const auto places = critical_places(q.field(), q.entries());
  std::map<Place, int> sign;
  for (const auto& v : places) sign[v] = 1;
  std::int64_t running_det = 1;
  for (auto a : q.entries()) {
    if (running_det != 1)
      for (const auto& v : places) sign[v] *= hilbert_symbol(running_det, a, v);
    running_det = class_mul(q.field(), running_det, a);
  }
  std::set<Place> ram;
  for (const auto& [v, s] : sign)
    if (s == -1) ram.insert(v);
  return BrauerClass2(std::move(ram));
}

WittInvariants invariants(const QForm& q) {
  WittInvariants inv;
  inv.dim = static_cast<int>(q.dim());
  inv.signature = q.positive_count() - q.negative_count();
  std::int64_t det = 1;
  for (auto a : q.entries()) det = class_mul(q.field(), det, a);
  inv.disc = class_mul(q.field(), sign_power(inv.dim), det);
  const auto places = critical_places(q.field(), q.entries());
  inv.clifford = hasse_invariant(q) + hasse_to_clifford_correction(inv.dim, det, places);
  return inv;
}

bool is_isotropic(Field field, const WittInvariants& inv) {
  const int n = inv.dim;
  if (n < 2) return false;
  if (std::abs(inv.signature) >= n) return false;  // definite at the real place
  if (field == Field::R || n >= 5) return true;
  const std::int64_t det = class_mul(field, sign_power(n), inv.disc);
  if (n == 2) return class_mul(field, -1, det) == 1;
  const auto places = places_for(field, inv);
  const BrauerClass2 hasse = inv.clifford + hasse_to_clifford_correction(n, det, places);
  for (const auto& v : places) {
    if (v.is_infinite()) continue;
    const int eps = hasse.is_ramified_at(v) ? -1 : 1;
    if (n == 3) {
      if (hilbert_symbol(-1, -det, v) != eps) return false;
    } else {
      const bool det_square = nt::is_local_square(det, v.prime_value());
      if (det_square && eps != hilbert_symbol(-1, -1, v)) return false;
    }
  }
  return true;
}

bool is_isotropic(const QForm& q) {
  if (q.dim() == 0) throw std::invalid_argument("is_isotropic: zero-dimensional form");
  return is_isotropic(q.field(), invariants(q));
}

WittDecomposition witt_decompose(const QForm& q) {
  WittDecomposition out;
  out.kernel = invariants(q);
  while (is_isotropic(q.field(), out.kernel)) {
    out.kernel.dim -= 2;
    ++out.witt_index;
  }
  return out;
}

namespace {

bool hyperbolic_profile(const WittInvariants& inv) {
  return inv.dim % 2 == 0 && inv.disc == 1 && inv.clifford.is_split() && inv.signature == 0;
}

}  // namespace

bool is_hyperbolic(const QForm& q) { return hyperbolic_profile(invariants(q)); }

bool witt_equal(const QForm& a, const QForm& b) {
  require_same_field(a, b);
  return hyperbolic_profile(invariants(orthogonal_sum(a, negate(b))));
}

bool in_In(const QForm& q, int n) {
  if (n < 0) throw std::invalid_argument("in_In: negative power");
  if (n == 0) return true;
  const auto inv = invariants(q);
  if (inv.dim % 2 != 0) return false;
  if (n >= 2 && inv.disc != 1) return false;
  if (n >= 3 && !inv.clifford.is_split()) return false;
  if (n >= 4) {
    if (n >= 62) return inv.signature == 0;
    const std::int64_t modulus = std::int64_t{1} << n;
    if (inv.signature % modulus != 0) return false;
  }
  return true;
}

int i_level(const QForm& q) {
  const auto inv = invariants(q);
  if (hyperbolic_profile(inv)) return kILevelHyperbolic;
  int level = 0;
  while (level < kILevelCap && in_In(q, level + 1)) ++level;
  return level;
}

bool e3_zero(const QForm& q) {
  if (!in_In(q, 3)) throw std::domain_error("e3 is only defined on forms in I^3");
  return in_In(q, 4);
}

int e3_symbol_length(const QForm& q) { return e3_zero(q) ? 0 : 1; }

std::string to_string(const QForm& q) {
  std::string s;
  for (std::size_t i = 0; i < q.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(q.entries()[i]);
  }
  return s;
}

namespace {

std::vector<std::int64_t> parse_integers(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed integer '" + std::string(token) + "'");
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

}  // namespace

QForm parse_form(std::string_view text, Field field) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return QForm(field);
  const bool is_pfister = text.starts_with("<<") && text.ends_with(">>");
  if (is_pfister) text = text.substr(2, text.size() - 4);
  const auto values = parse_integers(text);
  for (auto v : values)
    if (v == 0) throw std::invalid_argument("zero symbol entry");
  return is_pfister ? pfister(field, values) : QForm(field, values);
}

}  // namespace e8kit

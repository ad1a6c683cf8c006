#pragma once

// Quadratic forms and their Witt classes over Q and R.
//
// Over these two fields the Witt class of a form is determined by its
// dimension parity, signed discriminant, Clifford invariant (as a set of
// ramified places) and signature.  I^3 is torsion-free there, so membership
// in I^n for n >= 4 reduces to 2^n dividing the signature of a form already
// in I^3.  Everything in this header is decided from those invariants.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace e8kit {

enum class Field { Q, R };

std::string_view to_string(Field f);

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A place of Q: a prime p or the real place.
class Place {
 public:
  static Place infinity() { return Place(0); }
  /// Throws std::invalid_argument unless p is prime.
  static Place prime(std::int64_t p);

  bool is_infinite() const { return p_ == 0; }
  std::uint64_t prime_value() const { return p_; }

  std::string str() const;

  // The real place sorts last.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.p_ == b.p_) return std::strong_ordering::equal;
    if (a.p_ == 0) return std::strong_ordering::greater;
    if (b.p_ == 0) return std::strong_ordering::less;
    return a.p_ <=> b.p_;
  }
  friend bool operator==(const Place&, const Place&) = default;

 private:
  explicit Place(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Hilbert symbol (a, b)_v in {+1, -1}.
int hilbert_symbol(std::int64_t a, std::int64_t b, Place v);

/// Brauer class of exponent dividing 2, stored as its ramification set.
class BrauerClass2 {
 public:
  BrauerClass2() = default;
  explicit BrauerClass2(std::set<Place> ramified) : ramified_(std::move(ramified)) {}

  const std::set<Place>& ramified() const { return ramified_; }
  bool is_split() const { return ramified_.empty(); }
  bool is_ramified_at(Place v) const { return ramified_.count(v) != 0; }

  /// Group law: symmetric difference of ramification sets.
  friend BrauerClass2 operator+(const BrauerClass2& a, const BrauerClass2& b);
  friend bool operator==(const BrauerClass2&, const BrauerClass2&) = default;

  std::string str() const;

 private:
  std::set<Place> ramified_;
};

/// Quaternion symbol (a, b) with square-class-reduced slots.
class Quaternion {
 public:
  Quaternion(Field field, std::int64_t a, std::int64_t b);

  Field field() const { return field_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

 private:
  Field field_;
  std::int64_t a_;
  std::int64_t b_;
};

/// Diagonal quadratic form with square-free integer entries (+-1 over R).
class QForm {
 public:
  explicit QForm(Field field) : field_(field) {}
  /// Reduces every entry to its square class; zero entries throw.
  QForm(Field field, std::span<const std::int64_t> entries);
  QForm(Field field, std::initializer_list<std::int64_t> entries);
  /// Entries given as nonzero rationals (e.g. Gram-Schmidt pivots).
  static QForm from_rationals(Field field, std::span<const mpq_class> entries);

  Field field() const { return field_; }
  std::size_t dim() const { return entries_.size(); }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  /// Counts of positive and negative entries.
  int positive_count() const;
  int negative_count() const;

  friend bool operator==(const QForm&, const QForm&) = default;

 private:
  Field field_;
  std::vector<std::int64_t> entries_;
};

/// Square class of n over the field: square-free part over Q, sign over R.
std::int64_t square_class(Field field, std::int64_t n);

// Form algebra.  Sum concatenates, tensor distributes entries pairwise.
QForm orthogonal_sum(const QForm& a, const QForm& b);
QForm tensor(const QForm& a, const QForm& b);
QForm scale(const QForm& q, std::int64_t s);
QForm negate(const QForm& q);
/// n copies of q; negative n gives copies of -q.
QForm multiple(const QForm& q, int n);
/// <<a1,...,an>> = <1,-a1> (x) ... (x) <1,-an>.
QForm pfister(Field field, std::span<const std::int64_t> slots);
QForm pfister(Field field, std::initializer_list<std::int64_t> slots);
QForm hyperbolic(Field field, int planes);

inline QForm operator+(const QForm& a, const QForm& b) { return orthogonal_sum(a, b); }
inline QForm operator-(const QForm& a, const QForm& b) { return orthogonal_sum(a, negate(b)); }
inline QForm operator-(const QForm& q) { return negate(q); }
inline QForm operator*(const QForm& a, const QForm& b) { return tensor(a, b); }
inline QForm operator*(int n, const QForm& q) { return multiple(q, n); }

struct QuaternionForms {
  QForm norm;  ///< <1,-a,-b,ab>
  QForm pure;  ///< <-a,-b,ab>
};
QuaternionForms quaternion_forms(const Quaternion& q);

BrauerClass2 brauer_class(const Quaternion& q);
BrauerClass2 brauer_sum(std::span<const Quaternion> qs);

struct WittInvariants {
  int dim = 0;
  std::int64_t disc = 1;  ///< signed discriminant as a square class
  BrauerClass2 clifford;  ///< Witt (Clifford) invariant
  int signature = 0;

  friend bool operator==(const WittInvariants&, const WittInvariants&) = default;
};

WittInvariants invariants(const QForm& q);

/// Hasse invariant prod_{i<j} (a_i, a_j) as the set of places where it is -1.
BrauerClass2 hasse_invariant(const QForm& q);

bool is_isotropic(const QForm& q);
/// Isotropy decided from invariants alone (Hasse-Minkowski over Q).
bool is_isotropic(Field field, const WittInvariants& inv);

struct WittDecomposition {
  int witt_index = 0;
  WittInvariants kernel;
};
WittDecomposition witt_decompose(const QForm& q);

bool is_hyperbolic(const QForm& q);
bool witt_equal(const QForm& a, const QForm& b);

inline constexpr int kILevelCap = 12;
/// Returned by i_level for hyperbolic forms (they lie in every I^n).
inline constexpr int kILevelHyperbolic = kILevelCap + 1;

bool in_In(const QForm& q, int n);
int i_level(const QForm& q);

/// True when the Arason invariant vanishes; q must lie in I^3.
bool e3_zero(const QForm& q);
/// Symbol length of e3(q) in H^3; over Q and R this is 0 or 1.
int e3_symbol_length(const QForm& q);

/// "1,-2,3" style diagonal string.
std::string to_string(const QForm& q);
/// Parses "1,-2,3" or the Pfister shorthand "<<a,b,c>>".
QForm parse_form(std::string_view text, Field field);

}  // namespace e8kit

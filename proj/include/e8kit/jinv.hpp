#pragma once

// Truncated integer power series and the exhaustive search comparing a
// product of cyclotomic quotients with the generating function of PGL.

#include <cstdint>
#include <vector>

namespace e8kit {

/// Power series with coefficients of t^0 .. t^{N-1}.
class IntSeries {
 public:
  explicit IntSeries(int order);
  IntSeries(int order, std::vector<std::int64_t> coeffs);

  static IntSeries one(int order);

  int order() const { return static_cast<int>(c_.size()); }
  std::int64_t operator[](int k) const { return k < order() ? c_[k] : 0; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  /// Largest k with a nonzero coefficient, or -1.
  int degree() const;

  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
  friend bool operator==(const IntSeries&, const IntSeries&) = default;

  /// Exact quotient a / b; throws if b has zero constant term or the
  /// division leaves a remainder within the truncation.
  static IntSeries divide(const IntSeries& a, const IntSeries& b);

 private:
  std::vector<std::int64_t> c_;
};

/// (1 - t^{d 2^j}) / (1 - t^d) = 1 + t^d + ... + t^{(2^j - 1) d}.
IntSeries cyclo_quotient(int d, int j, int order);
/// (1 - t^{2^s}) / (1 - t).
IntSeries pgl_gen_function(int s, int order);

struct JParams {
  int r = 0;
  std::vector<int> d;  ///< d_i = 2i - 1
  std::vector<int> k;  ///< k_1 = v2(deg/2); the others are bounded by s
  int s = 0;           ///< index = 2^s
  bool odd_cofactor = false;     ///< deg / index is odd
  bool k1_is_s_minus_1 = false;  ///< holds whenever the cofactor is odd
};

/// Half-spin parameters for a central simple algebra of degree degA and index indA.
JParams hspin_params(int degA, int indA);

/// Entry counts used for the search: ceil(s/2) and 2^s / 4.
int entries_from_half_s(int s);
int entries_from_degree(int s);

struct SearchResult {
  std::vector<std::vector<int>> solutions;  ///< j tuples, lexicographic
  bool all_j1_at_least_s = true;
  std::uint64_t candidates = 0;             ///< tuples surviving the degree bound
};

/// All j in [0, s]^r whose product of cyclo_quotient(2i - 1, j_i) equals
/// pgl_gen_function(s) through t^{order-1}. Parallel over j_1.
SearchResult search_equality(int s, int r, int order);
SearchResult search_equality_serial(int s, int r, int order);

/// sum_i d_i (2^{j_i} - 1); the degree of the product polynomial.
std::int64_t product_degree(const std::vector<int>& j);

/// Product of the cyclotomic quotients for a tuple j.
IntSeries j_product(const std::vector<int>& j, int order);

/// True when the product agrees with pgl_gen_function(s) at t^0 .. t^3.
bool matches_through_cubic(const std::vector<int>& j, int s);

}  // namespace e8kit

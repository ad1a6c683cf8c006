#include "e8kit/jinv.hpp"

#include <algorithm>
#include <stdexcept>

namespace e8kit {

IntSeries::IntSeries(int order) {
  if (order < 0) throw std::invalid_argument("IntSeries: negative truncation order");
  c_.assign(static_cast<std::size_t>(order), 0);
}

IntSeries::IntSeries(int order, std::vector<std::int64_t> coeffs) : IntSeries(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
}

IntSeries IntSeries::one(int order) {
  IntSeries s(order);
  if (order > 0) s.c_[0] = 1;
  return s;
}

int IntSeries::degree() const {
  for (int k = order() - 1; k >= 0; --k)
    if (c_[k] != 0) return k;
  return -1;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  const int n = std::min(a.order(), b.order());
  IntSeries out(n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
  const int n = std::min(a.order(), b.order());
  IntSeries out(n);
  for (int i = 0; i < n; ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) {
  const int n = std::min(a.order(), b.order());
  IntSeries out(n);
  for (int i = 0; i < n; ++i) out.c_[i] = a.c_[i] - b.c_[i];
  return out;
}

IntSeries IntSeries::divide(const IntSeries& a, const IntSeries& b) {
  const int n = std::min(a.order(), b.order());
  if (n == 0) return IntSeries(0);
  if (b.c_[0] == 0) throw std::domain_error("IntSeries::divide: divisor has zero constant term");
  IntSeries q(n);
  for (int k = 0; k < n; ++k) {
    std::int64_t rest = a.c_[k];
    for (int i = 0; i < k; ++i) rest -= q.c_[i] * b.c_[k - i];
    if (rest % b.c_[0] != 0) throw std::domain_error("IntSeries::divide: quotient is not integral");
    q.c_[k] = rest / b.c_[0];
  }
  return q;
}

IntSeries cyclo_quotient(int d, int j, int order) {
  if (d < 1 || j < 0) throw std::invalid_argument("cyclo_quotient: need d >= 1 and j >= 0");
  if (order < 0) throw std::invalid_argument("cyclo_quotient: negative truncation order");
  std::vector<std::int64_t> c(static_cast<std::size_t>(order), 0);
  const std::int64_t terms = j >= 62 ? (std::int64_t{1} << 62) : (std::int64_t{1} << j);
  for (std::int64_t m = 0; m < terms && m * d < order; ++m) c[m * d] = 1;
  return IntSeries(order, std::move(c));
}

IntSeries pgl_gen_function(int s, int order) {
  if (s < 0) throw std::invalid_argument("pgl_gen_function: negative s");
  return cyclo_quotient(1, s, order);
}

JParams hspin_params(int degA, int indA) {
  if (degA <= 0 || degA % 4 != 0) throw std::invalid_argument("hspin_params: degree must be a positive multiple of 4");
  if (indA <= 0 || (indA & (indA - 1)) != 0 || degA % indA != 0)
    throw std::invalid_argument("hspin_params: index must be a power of 2 dividing the degree");
  JParams p;
  p.r = degA / 4;
  while ((1 << p.s) < indA) ++p.s;
  int k1 = 0;
  for (int half = degA / 2; half % 2 == 0; half /= 2) ++k1;
  for (int i = 1; i <= p.r; ++i) {
    p.d.push_back(2 * i - 1);
    p.k.push_back(i == 1 ? k1 : p.s);
  }
  p.odd_cofactor = (degA / indA) % 2 == 1;
  p.k1_is_s_minus_1 = k1 == p.s - 1;
  return p;
}

int entries_from_half_s(int s) { return std::max(1, (s + 1) / 2); }

int entries_from_degree(int s) { return std::max(1, (1 << s) / 4); }

std::int64_t product_degree(const std::vector<int>& j) {
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < j.size(); ++i) deg += static_cast<std::int64_t>(2 * i + 1) * ((std::int64_t{1} << j[i]) - 1);
  return deg;
}

IntSeries j_product(const std::vector<int>& j, int order) {
  IntSeries p = IntSeries::one(order);
  for (std::size_t i = 0; i < j.size(); ++i) p = p * cyclo_quotient(static_cast<int>(2 * i + 1), j[i], order);
  return p;
}

bool matches_through_cubic(const std::vector<int>& j, int s) { return j_product(j, 4) == pgl_gen_function(s, 4); }

namespace {

void validate_search(int s, int r, int order) {
  if (s < 0 || r < 1) throw std::invalid_argument("search_equality: need s >= 0 and r >= 1");
  if (s > 20) throw std::invalid_argument("search_equality: s too large");
  if (order < (1 << s)) throw std::invalid_argument("search_equality: truncation order below 2^s");
}

// Depth-first enumeration of j_2..j_r below a fixed j_1, pruning any partial
// tuple whose polynomial degree already exceeds 2^s - 1.
void extend(std::vector<int>& j, std::size_t pos, std::int64_t deg, std::int64_t target, int s, const IntSeries& goal,
            int order, std::vector<std::vector<int>>& out, std::uint64_t& candidates) {
  if (pos == j.size()) {
    ++candidates;
    if (deg == target && j_product(j, order) == goal) out.push_back(j);
    return;
  }
  const std::int64_t d = static_cast<std::int64_t>(2 * pos + 1);
  for (int v = 0; v <= s; ++v) {
    const std::int64_t next = deg + d * ((std::int64_t{1} << v) - 1);
    if (next > target) break;
    j[pos] = v;
    extend(j, pos + 1, next, target, s, goal, order, out, candidates);
  }
  j[pos] = 0;
}

SearchResult finish(std::vector<std::vector<int>> solutions, std::uint64_t candidates, int s) {
  std::sort(solutions.begin(), solutions.end());
  SearchResult res;
  res.candidates = candidates;
  for (const auto& sol : solutions)
    if (sol[0] < s) res.all_j1_at_least_s = false;
  res.solutions = std::move(solutions);
  return res;
}

}  // namespace

SearchResult search_equality(int s, int r, int order) {
  validate_search(s, r, order);
  const IntSeries goal = pgl_gen_function(s, order);
  const std::int64_t target = (std::int64_t{1} << s) - 1;
  std::vector<std::vector<std::vector<int>>> per_j1(static_cast<std::size_t>(s + 1));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(s + 1), 0);
#pragma omp parallel for schedule(dynamic)
  for (int j1 = 0; j1 <= s; ++j1) {
    const std::int64_t deg = (std::int64_t{1} << j1) - 1;
    if (deg > target) continue;
    std::vector<int> j(static_cast<std::size_t>(r), 0);
    j[0] = j1;
    extend(j, 1, deg, target, s, goal, order, per_j1[j1], counts[j1]);
  }
  std::vector<std::vector<int>> all;
  std::uint64_t total = 0;
  for (int j1 = 0; j1 <= s; ++j1) {
    all.insert(all.end(), per_j1[j1].begin(), per_j1[j1].end());
    total += counts[j1];
  }
  return finish(std::move(all), total, s);
}

SearchResult search_equality_serial(int s, int r, int order) {
  validate_search(s, r, order);
  const IntSeries goal = pgl_gen_function(s, order);
  std::vector<std::vector<int>> out;
  std::uint64_t total = 0;
  // No pruning here: every tuple in [0, s]^r is compared in full.  The
  // comparison order covers the tuple's own degree, so a truncation never
  // hides terms.
  std::vector<int> j(static_cast<std::size_t>(r), 0);
  while (true) {
    ++total;
    const auto deg = product_degree(j);
    const int exact = static_cast<int>(std::max<std::int64_t>(order, deg + 1));
    if (exact == order ? j_product(j, order) == goal : j_product(j, exact) == pgl_gen_function(s, exact))
      out.push_back(j);
    std::size_t pos = 0;
    while (pos < j.size() && j[pos] == s) j[pos++] = 0;
    if (pos == j.size()) break;
    ++j[pos];
  }
  return finish(std::move(out), total, s);
}

}  // namespace e8kit

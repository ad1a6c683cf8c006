#include "e8kit/chevalley.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace e8kit {

LieAlgebra::LieAlgebra(const RootSystem& rs) : rs_(rs) {
  if (!rs_.simply_laced()) throw std::invalid_argument("chevalley_basis: only simply-laced systems are supported");
  const std::size_t r = rs_.rank();
  dim_ = r + rs_.roots().size();
  f_.assign(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    f_[i][i] = 1;
    for (std::size_t j = i + 1; j < r; ++j)
      if (rs_.gram()[i][j] != 0) f_[i][j] = 1;
  }

  // (alpha_i, beta) for every simple root i and every root beta.
  const auto& roots = rs_.roots();
  std::vector<std::vector<std::int64_t>> weights(r, std::vector<std::int64_t>(roots.size()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const mpq_class p = rs_.pairing(rs_.simple_root(i), roots[k]);
      weights[i][k] = p.get_num().get_si();
    }

  table_.assign(dim_ * dim_, {});
  auto at = [&](std::size_t a, std::size_t b) -> std::vector<Term>& { return table_[a * dim_ + b]; };
  auto sign_of = [](const IVec& v) { return height(v) > 0 ? 1 : -1; };

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const auto w = weights[i][k];
      if (w == 0) continue;
      const auto xk = static_cast<std::uint32_t>(r + k);
      at(i, xk).push_back({xk, w});
      at(xk, i).push_back({xk, -w});
    }

  for (std::size_t ka = 0; ka < roots.size(); ++ka)
    for (std::size_t kb = 0; kb < roots.size(); ++kb) {
      const IVec& a = roots[ka];
      const IVec& b = roots[kb];
      IVec sum(r);
      for (std::size_t i = 0; i < r; ++i) sum[i] = a[i] + b[i];
      auto& cell = at(r + ka, r + kb);
      if (std::all_of(sum.begin(), sum.end(), [](auto x) { return x == 0; })) {
        for (std::size_t i = 0; i < r; ++i)
          if (a[i] != 0) cell.push_back({static_cast<std::uint32_t>(i), a[i]});
        continue;
      }
      const auto idx = rs_.index_of(sum);
      if (!idx) continue;
      const int n = sign_of(a) * sign_of(b) * sign_of(sum) * cocycle(a, b);
      cell.push_back({static_cast<std::uint32_t>(r + *idx), n});
    }
}

int LieAlgebra::cocycle(const IVec& a, const IVec& b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < f_.size(); ++i)
    for (std::size_t j = i; j < f_.size(); ++j)
      if (f_[i][j]) s += a[i] * b[j];
  return (s % 2 == 0) ? 1 : -1;
}

int LieAlgebra::coxeter_number() const {
  return static_cast<int>(rs_.roots().size() / rs_.rank());
}

std::size_t LieAlgebra::x_index(const IVec& root) const {
  const auto idx = rs_.index_of(root);
  if (!idx) throw std::invalid_argument("x_index: not a root " + format_vector(root));
  return rank() + *idx;
}

std::string LieAlgebra::basis_label(std::size_t k) const {
  if (k < rank()) return "h" + std::to_string(k + 1);
  return "X" + format_vector(rs_.roots().at(k - rank()));
}

IVec LieAlgebra::weight(std::size_t k) const {
  if (k < rank()) return IVec(rank(), 0);
  return rs_.roots().at(k - rank());
}

std::vector<Term> LieAlgebra::bracket(std::size_t a, std::size_t b) const { return table_.at(a * dim_ + b); }

std::vector<Term> LieAlgebra::bracket(const std::vector<Term>& x, const std::vector<Term>& y) const {
  std::map<std::uint32_t, std::int64_t> acc;
  for (const auto& s : x)
    for (const auto& t : y)
      for (const auto& u : table_[s.index * dim_ + t.index]) acc[u.index] += s.coef * t.coef * u.coef;
  std::vector<Term> out;
  for (const auto& [k, v] : acc)
    if (v != 0) out.push_back({k, v});
  return out;
}

std::int64_t LieAlgebra::structure_constant(const IVec& alpha, const IVec& beta) const {
  IVec sum(alpha.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = alpha[i] + beta[i];
  if (!rs_.is_root(sum)) return 0;
  const auto target = x_index(sum);
  for (const auto& t : table_[x_index(alpha) * dim_ + x_index(beta)])
    if (t.index == target) return t.coef;
  return 0;
}

LieAlgebra chevalley_basis(const RootSystem& rs) { return LieAlgebra(rs); }

std::vector<Term> jacobiator(const LieAlgebra& L, std::size_t a, std::size_t b, std::size_t c) {
  auto single = [](std::size_t k) { return std::vector<Term>{{static_cast<std::uint32_t>(k), 1}}; };
  std::map<std::uint32_t, std::int64_t> acc;
  for (const auto& t : L.bracket(L.bracket(a, b), single(c))) acc[t.index] += t.coef;
  for (const auto& t : L.bracket(L.bracket(b, c), single(a))) acc[t.index] += t.coef;
  for (const auto& t : L.bracket(L.bracket(c, a), single(b))) acc[t.index] += t.coef;
  std::vector<Term> out;
  for (const auto& [k, v] : acc)
    if (v != 0) out.push_back({k, v});
  return out;
}

namespace {

std::int64_t coefficient(const std::vector<Term>& terms, std::size_t index) {
  for (const auto& t : terms)
    if (t.index == index) return t.coef;
  return 0;
}

std::int64_t killing_entry(const LieAlgebra& L, std::size_t a, std::size_t b) {
  std::int64_t trace = 0;
  for (std::size_t c = 0; c < L.dim(); ++c)
    for (const auto& t : L.bracket(b, c)) {
      const auto& inner = L.bracket(a, t.index);
      trace += t.coef * coefficient(inner, c);
    }
  return trace;
}

}  // namespace

Matrix<std::int64_t> killing_integer_matrix(const LieAlgebra& L) {
  const auto n = static_cast<long>(L.dim());
  Matrix<std::int64_t> k(L.dim(), L.dim());
#pragma omp parallel for schedule(dynamic, 4)
  for (long a = 0; a < n; ++a)
    for (long b = a; b < n; ++b) {
      const auto v = killing_entry(L, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      k(a, b) = v;
      k(b, a) = v;
    }
  return k;
}

Matrix<std::int64_t> killing_integer_matrix_serial(const LieAlgebra& L) {
  Matrix<std::int64_t> k(L.dim(), L.dim());
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = a; b < L.dim(); ++b) {
      const auto v = killing_entry(L, a, b);
      k(a, b) = v;
      k(b, a) = v;
    }
  return k;
}

FormMatrix killing_matrix(const LieAlgebra& L, FormScale scale) {
  const auto k = killing_integer_matrix(L);
  const mpq_class divisor = scale == FormScale::killing ? 1 : 2 * L.dual_coxeter_number();
  QMatrix g(L.dim(), L.dim());
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = 0; b < L.dim(); ++b)
      if (k(a, b) != 0) g(a, b) = mpq_class(k(a, b)) / divisor;
  return {scale, std::move(g)};
}

QForm restricted_form(const QMatrix& gram, const std::vector<std::size_t>& indices, Field field) {
  QMatrix sub(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) sub(i, j) = gram(indices[i], indices[j]);
  const auto diag = diagonalize_symmetric(std::move(sub));
  return QForm::from_rationals(field, diag);
}

QForm cartan_restriction_witt(const LieAlgebra& L) {
  const std::size_t r = L.rank();
  QMatrix g(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      g(i, j) = mpq_class(killing_entry(L, i, j)) / (2 * L.dual_coxeter_number());
  std::vector<std::size_t> all(r);
  for (std::size_t i = 0; i < r; ++i) all[i] = i;
  return restricted_form(g, all);
}

BranchingReport branching_check(const LieAlgebra& e8, const CorootMap& map) {
  return branching_check(e8, map, killing_matrix(e8, FormScale::reduced_killing));
}

BranchingReport branching_check(const LieAlgebra& e8, const CorootMap& map, const FormMatrix& reduced) {
  if (map.name != "D8_in_E8" || e8.root_system().label() != SystemLabel::E8)
    throw std::invalid_argument("branching_check: expects the D8 table inside E8");
  if (reduced.scale != FormScale::reduced_killing) throw std::invalid_argument("branching_check: expects reduced form");

  const RootSystem d8(SystemLabel::D8);
  const std::size_t r = e8.rank();
  std::set<std::size_t> sub;
  for (std::size_t i = 0; i < r; ++i) sub.insert(i);

  BranchingReport rep;
  rep.roots_mapped = true;
  for (const auto& root : d8.roots()) {
    IVec img(r, 0);
    for (std::size_t i = 0; i < d8.rank(); ++i)
      for (std::size_t k = 0; k < r; ++k) img[k] += root[i] * map.rows.at(i).image[k];
    if (!e8.root_system().is_root(img)) {
      rep.roots_mapped = false;
      continue;
    }
    sub.insert(e8.x_index(img));
  }
  std::vector<std::size_t> sub_idx(sub.begin(), sub.end());
  std::vector<std::size_t> comp_idx;
  for (std::size_t k = 0; k < e8.dim(); ++k)
    if (!sub.count(k)) comp_idx.push_back(k);
  rep.subalg_dim = sub_idx.size();
  rep.complement_dim = comp_idx.size();

  rep.cross_block_zero = true;
  for (auto s : sub_idx)
    for (auto c : comp_idx)
      if (reduced.gram(s, c) != 0) rep.cross_block_zero = false;

  rep.subalg_witt = restricted_form(reduced.gram, sub_idx);
  rep.complement_witt = restricted_form(reduced.gram, comp_idx);
  return rep;
}

}  // namespace e8kit

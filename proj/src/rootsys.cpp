#include "e8kit/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "e8kit/linalg.hpp"

namespace e8kit {

std::string_view to_string(SystemLabel label) {
  switch (label) {
    case SystemLabel::A1: return "A1";
    case SystemLabel::C4: return "C4";
    case SystemLabel::D4: return "D4";
    case SystemLabel::D8: return "D8";
    case SystemLabel::E8: return "E8";
  }
  return "?";
}

namespace {

using Edge = std::pair<int, int>;

std::vector<std::vector<mpq_class>> simply_laced_gram(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
  // Edges use Bourbaki's 1-based node numbers.
  for (auto [a, b] : edges) {
    g[a - 1][b - 1] = -1;
    g[b - 1][a - 1] = -1;
  }
  return g;
}

std::vector<std::vector<mpq_class>> gram_for(SystemLabel label) {
  switch (label) {
    case SystemLabel::A1:
      return simply_laced_gram(1, {});
    case SystemLabel::D4:
      return simply_laced_gram(4, {{1, 2}, {2, 3}, {2, 4}});
    case SystemLabel::D8:
      return simply_laced_gram(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}});
    case SystemLabel::E8:
      return simply_laced_gram(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}});
    case SystemLabel::C4: {
      // gamma1..gamma3 short (length 1), gamma4 long (length 2).
      std::vector<std::vector<mpq_class>> g(4, std::vector<mpq_class>(4, 0));
      g[0][0] = g[1][1] = g[2][2] = 1;
      g[3][3] = 2;
      g[0][1] = g[1][0] = mpq_class(-1, 2);
      g[1][2] = g[2][1] = mpq_class(-1, 2);
      g[2][3] = g[3][2] = -1;
      return g;
    }
  }
  throw std::invalid_argument("unknown root system label");
}

}  // namespace

RootSystem::RootSystem(SystemLabel label) : label_(label), gram_(gram_for(label)) {
  rank_ = gram_.size();
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) {
      mpq_class a = 2 * gram_[i][j] / gram_[j][j];
      cartan_[i][j] = static_cast<int>(a.get_num().get_si());
    }

  std::set<IVec> seen;
  std::deque<IVec> queue;
  for (std::size_t i = 0; i < rank_; ++i) {
    IVec e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IVec v = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < rank_; ++j) {
      std::int64_t coef = 0;
      for (std::size_t i = 0; i < rank_; ++i) coef += v[i] * cartan_[i][j];
      if (coef == 0) continue;
      IVec w = v;
      w[j] -= coef;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  roots_.assign(seen.begin(), seen.end());
  for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k], k);
}

std::vector<IVec> RootSystem::positive_roots() const {
  std::vector<IVec> out;
  for (const auto& r : roots_)
    if (height(r) > 0) out.push_back(r);
  return out;
}

IVec RootSystem::simple_root(std::size_t i) const {
  IVec e(rank_, 0);
  e.at(i) = 1;
  return e;
}

std::optional<std::size_t> RootSystem::index_of(const IVec& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

mpq_class RootSystem::pairing(const IVec& v, const IVec& w) const {
  if (v.size() != rank_ || w.size() != rank_) throw std::invalid_argument("pairing: dimension mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      if (w[j] != 0 && gram_[i][j] != 0) s += gram_[i][j] * v[i] * w[j];
  }
  return s;
}

mpq_class RootSystem::coroot_pairing(const IVec& v, const IVec& w) const {
  if (v.size() != rank_ || w.size() != rank_) throw std::invalid_argument("coroot_pairing: dimension mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (v[i] != 0 && w[j] != 0) s += 4 * gram_[i][j] / (gram_[i][i] * gram_[j][j]) * v[i] * w[j];
  return s;
}

RootSystem build_root_system(SystemLabel label) { return RootSystem(label); }

std::int64_t height(const IVec& v) {
  std::int64_t h = 0;
  for (auto x : v) h += x;
  return h;
}

IVec highest_root(const RootSystem& rs) {
  const IVec* best = &rs.roots().front();
  for (const auto& r : rs.roots())
    if (height(r) > height(*best)) best = &r;
  for (const auto& r : rs.roots())
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] > (*best)[i]) throw std::logic_error("highest_root: no dominating root");
  return *best;
}

const CorootRow& CorootMap::row(std::string_view label) const {
  for (const auto& r : rows)
    if (r.label == label) return r;
  throw std::out_of_range("CorootMap: no row " + std::string(label));
}

std::string_view to_string(EmbeddingTable t) {
  switch (t) {
    case EmbeddingTable::D8_in_E8: return "D8_in_E8";
    case EmbeddingTable::A1C4_in_D8: return "A1C4_in_D8";
    case EmbeddingTable::A1C4_in_E8: return "A1C4_in_E8";
    case EmbeddingTable::PGL2x4_in_E8: return "PGL2x4_in_E8";
  }
  return "?";
}

namespace {

IVec unit(std::size_t n, std::size_t i) {
  IVec e(n, 0);
  e[i] = 1;
  return e;
}

IVec neg(IVec v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

CorootMap embedding_table(EmbeddingTable t) {
  CorootMap m;
  m.name = std::string(to_string(t));
  switch (t) {
    case EmbeddingTable::D8_in_E8: {
      m.target = SystemLabel::E8;
      m.components = {{SystemLabel::D8, 1}};
      const IVec eps_tilde{2, 3, 4, 6, 5, 4, 3, 2};
      const std::vector<IVec> images = {neg(eps_tilde), unit(8, 7), unit(8, 6), unit(8, 5),
                                        unit(8, 4),     unit(8, 3), unit(8, 1), unit(8, 2)};
      for (std::size_t i = 0; i < 8; ++i)
        m.rows.push_back({"delta" + std::to_string(i + 1), 0, unit(8, i), images[i]});
      break;
    }
    case EmbeddingTable::A1C4_in_D8:
      m.target = SystemLabel::D8;
      m.components = {{SystemLabel::A1, 4}, {SystemLabel::C4, 1}};
      m.rows = {
          {"alpha1", 0, {1}, {1, 2, 3, 4, 3, 2, 1, 0}},
          {"gamma1", 1, unit(4, 0), {1, 0, 0, 0, 0, 0, -1, 0}},
          {"gamma2", 1, unit(4, 1), {0, 1, 0, 0, 0, -1, 0, 0}},
          {"gamma3", 1, unit(4, 2), {0, 0, 1, 0, -1, 0, 0, 0}},
          {"gamma4", 1, unit(4, 3), {0, 0, 0, 1, 2, 2, 1, 1}},
      };
      break;
    case EmbeddingTable::A1C4_in_E8:
      m.target = SystemLabel::E8;
      m.components = {{SystemLabel::A1, 4}, {SystemLabel::C4, 1}};
      m.rows = {
          {"alpha1", 0, {1}, {-2, -2, -4, -4, -2, 0, 0, 0}},
          {"gamma1", 1, unit(4, 0), {-2, -4, -4, -6, -5, -4, -3, -2}},
          {"gamma2", 1, unit(4, 1), {0, 0, 0, -1, 0, 0, 0, 1}},
          {"gamma3", 1, unit(4, 2), {0, 0, 0, 0, -1, 0, 1, 0}},
          {"gamma4", 1, unit(4, 3), {0, 1, 1, 2, 2, 1, 0, 0}},
      };
      break;
    case EmbeddingTable::PGL2x4_in_E8:
      m.target = SystemLabel::E8;
      m.components = {{SystemLabel::A1, 4}, {SystemLabel::A1, 4}, {SystemLabel::A1, 4}, {SystemLabel::A1, 4}};
      m.rows = {
          {"alpha1", 0, {1}, {-2, -2, -4, -4, -2, 0, 0, 0}},
          {"alpha2", 1, {1}, {-2, -4, -4, -6, -4, -4, -4, -2}},
          {"alpha3", 2, {1}, {-2, -4, -4, -6, -6, -4, -2, -2}},
          {"alpha4", 3, {1}, {-2, -4, -4, -8, -6, -4, -2, 0}},
      };
      break;
  }
  return m;
}

std::vector<CorootRow> pgl2x4_via_c4() {
  return {
      {"alpha2", 0, {1}, {1, 0, -1, 0}},
      {"alpha3", 0, {1}, {1, 0, 1, 0}},
      {"alpha4", 0, {1}, {1, 2, 1, 0}},
  };
}

CorootMap compose(const CorootMap& inner, const CorootMap& outer) {
  if (outer.components.size() != 1 || outer.components[0].source != inner.target)
    throw std::invalid_argument("compose: outer map must start at the inner target");
  const std::size_t mid_rank = RootSystem(inner.target).rank();
  std::vector<const IVec*> basis(mid_rank, nullptr);
  for (const auto& r : outer.rows)
    for (std::size_t i = 0; i < mid_rank; ++i)
      if (r.source == unit(mid_rank, i)) basis[i] = &r.image;
  for (auto* b : basis)
    if (b == nullptr) throw std::invalid_argument("compose: outer map lacks a simple coroot");

  CorootMap m;
  m.name = inner.name + "*" + outer.name;
  m.target = outer.target;
  for (const auto& c : inner.components) m.components.push_back({c.source, c.multiplier * outer.components[0].multiplier});
  const std::size_t out_rank = basis[0]->size();
  for (const auto& r : inner.rows) {
    IVec img(out_rank, 0);
    for (std::size_t i = 0; i < mid_rank; ++i)
      for (std::size_t k = 0; k < out_rank; ++k) img[k] += r.image[i] * (*basis[i])[k];
    m.rows.push_back({r.label, r.component, r.source, img});
  }
  return m;
}

std::size_t EmbeddingReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return !p.ok(); }));
}

EmbeddingReport verify_embedding(const CorootMap& map) {
  const RootSystem target(map.target);
  std::vector<RootSystem> sources;
  for (const auto& c : map.components) sources.emplace_back(c.source);

  EmbeddingReport rep;
  for (const auto& r : map.rows) {
    const bool zero = std::all_of(r.image.begin(), r.image.end(), [](auto x) { return x == 0; });
    if (r.image.size() != target.rank() || zero || r.component >= sources.size() ||
        r.source.size() != sources[r.component].rank())
      rep.bad_images.push_back(r.label);
  }
  if (!rep.bad_images.empty()) return rep;

  for (std::size_t i = 0; i < map.rows.size(); ++i)
    for (std::size_t j = i; j < map.rows.size(); ++j) {
      const auto& a = map.rows[i];
      const auto& b = map.rows[j];
      PairingCheck pc{a.label, b.label, 0, target.pairing(a.image, b.image)};
      if (a.component == b.component)
        pc.expected = map.components[a.component].multiplier * sources[a.component].coroot_pairing(a.source, b.source);
      rep.pairs.push_back(std::move(pc));
    }
  return rep;
}

mpq_class rost_multiplier(const CorootMap& map, std::size_t component) {
  if (component >= map.components.size()) throw std::invalid_argument("rost_multiplier: no such component");
  const RootSystem src(map.components[component].source);
  const CorootRow* best = nullptr;
  mpq_class best_len;
  for (const auto& r : map.rows) {
    if (r.component != component) continue;
    const bool simple = std::count(r.source.begin(), r.source.end(), 0) + 1 == static_cast<long>(r.source.size()) &&
                        std::count(r.source.begin(), r.source.end(), 1) == 1;
    if (!simple) continue;
    const mpq_class len = src.coroot_pairing(r.source, r.source);
    if (best == nullptr || len < best_len) {
      best = &r;
      best_len = len;
    }
  }
  if (best == nullptr) throw std::invalid_argument("rost_multiplier: no simple coroot of the component is mapped");
  const RootSystem target(map.target);
  return target.lengthsq(best->image) / 2;
}

std::vector<IVec> simple_system(const std::vector<IVec>& roots) {
  std::set<IVec> positive;
  for (const auto& r : roots)
    if (height(r) > 0) positive.insert(r);
  std::vector<IVec> simple;
  for (const auto& p : positive) {
    bool decomposable = false;
    for (const auto& q : positive) {
      if (height(q) >= height(p)) continue;
      IVec diff = p;
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= q[i];
      if (positive.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(p);
  }
  return simple;
}

std::string recognize_type(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || cartan[i][j] == 0) continue;
      if (cartan[i][j] != -1 || cartan[j][i] != -1) return "?";
      adj[i].push_back(j);
    }
  std::vector<bool> seen(n, false);
  std::vector<std::pair<char, std::size_t>> parts;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (auto nb : adj[comp[k]])
        if (!seen[nb]) {
          seen[nb] = true;
          comp.push_back(nb);
        }
    std::size_t edges = 0;
    std::vector<std::size_t> branches;
    for (auto v : comp) {
      edges += adj[v].size();
      if (adj[v].size() > 3) return "?";
      if (adj[v].size() == 3) branches.push_back(v);
    }
    edges /= 2;
    const std::size_t size = comp.size();
    if (edges != size - 1 || branches.size() > 1) return "?";
    if (branches.empty()) {
      parts.emplace_back('A', size);
      continue;
    }
    std::vector<std::size_t> arms;
    const auto b = branches[0];
    for (auto first : adj[b]) {
      std::size_t len = 1, prev = b, cur = first;
      while (adj[cur].size() == 2) {
        const auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
      parts.emplace_back('D', size);
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      parts.emplace_back('E', size);
    else
      return "?";
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [letter, size] : parts) {
    if (!out.empty()) out += "+";
    out += letter + std::to_string(size);
  }
  return out;
}

Subsystem centralizer_roots(const RootSystem& rs, const std::vector<IVec>& coweights) {
  if (coweights.empty()) throw std::invalid_argument("centralizer_roots: empty coweight list");
  Subsystem sub;
  for (const auto& r : rs.roots()) {
    bool orthogonal = true;
    for (const auto& x : coweights)
      if (rs.pairing(r, x) != 0) {
        orthogonal = false;
        break;
      }
    if (orthogonal) sub.roots.push_back(r);
  }
  if (sub.roots.empty()) return sub;
  sub.simple = simple_system(sub.roots);
  const std::size_t k = sub.simple.size();
  sub.cartan.assign(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      mpq_class a = 2 * rs.pairing(sub.simple[i], sub.simple[j]) / rs.lengthsq(sub.simple[j]);
      sub.cartan[i][j] = static_cast<int>(a.get_num().get_si());
    }
  sub.type = recognize_type(sub.cartan);
  sub.highest = *std::max_element(sub.roots.begin(), sub.roots.end(),
                                  [](const IVec& a, const IVec& b) { return height(a) < height(b); });
  return sub;
}

std::vector<mpq_class> coordinates_in(const RootSystem& rs, const std::vector<IVec>& basis, const IVec& v) {
  const std::size_t k = basis.size();
  QMatrix g(k, k);
  QMatrix rhs(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g(i, j) = rs.pairing(basis[i], basis[j]);
    rhs(i, 0) = rs.pairing(basis[i], v);
  }
  const QMatrix c = inverse(g) * rhs;
  std::vector<mpq_class> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = c(i, 0);
  return out;
}

std::vector<IVec> c4_centralizer_table() {
  return {{0, 0, 0, 0, 0, 1, 0, 0}, {1, 1, 2, 2, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1, 1}};
}

std::string format_vector(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace e8kit

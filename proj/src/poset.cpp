#include "posetlab/poset.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace posetlab {

namespace {

Bits full_mask(int n) {
  Bits b(n);
  b.set_all();
  return b;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> ls(n);
  for (int i = 0; i < n; ++i) ls[i] = std::to_string(i);
  return ls;
}

void check_capacity(int n, int cap) {
  if (cap > Poset::kHardCapacity) cap = Poset::kHardCapacity;
  if (n > cap)
    throw CapacityExceeded("poset with " + std::to_string(n) +
                           " elements exceeds capacity " + std::to_string(cap));
  if (n <= 0) throw InvalidSpec("poset must be nonempty");
}

}  // namespace

Poset Poset::from_rows(std::vector<Bits> up, std::vector<std::string> labels) {
  Poset p;
  p.n_ = int(up.size());
  const int n = p.n_;
  if (labels.empty()) labels = default_labels(n);
  if (int(labels.size()) != n) throw InvalidArgs("label count mismatch");
  // Reflexivity + antisymmetry always; transitivity only at small sizes (the
  // builders construct transitive rows, this guards test-scale mistakes).
  for (int i = 0; i < n; ++i) {
    if (!up[i].test(i)) throw InternalError("relation not reflexive");
    for (int j = i + 1; j < n; ++j)
      if (up[i].test(j) && up[j].test(i))
        throw InternalError("relation not antisymmetric");
  }
  if (n <= 256) {
    for (int i = 0; i < n; ++i)
      up[i].for_each([&](int j) {
        if (!up[j].subset_of(up[i])) throw InternalError("relation not transitive");
      });
  }
  p.up_ = std::move(up);
  p.down_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i)
    p.up_[i].for_each([&](int j) { p.down_[j].set(i); });
  p.labels_ = std::move(labels);
  return p;
}

Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                        std::vector<std::string> labels, int cap) {
  check_capacity(n, cap);
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IndexOutOfRange("cover pair out of range");
    if (a == b) throw CycleDetected("self-loop in covers", {a});
    adj[a].push_back(b);
  }

  // Iterative DFS: cycle detection with witness, then reverse-topological
  // closure up[i] = {i} | union of up[j] over covers i < j.
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<int> order;        // reverse topological
  std::vector<int> parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < adj[v].size()) {
        int w = adj[v][idx++];
        if (state[w] == 1) {
          std::vector<int> cyc{w};
          for (int u = v; u != w; u = parent[u]) cyc.push_back(u);
          std::reverse(cyc.begin() + 1, cyc.end());
          throw CycleDetected("covers contain a cycle", cyc);
        }
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<Bits> up(n, Bits(n));
  for (int v : order) {  // children complete before parents
    up[v].set(v);
    for (int w : adj[v]) up[v] |= up[w];
  }
  return Poset::from_rows(std::move(up), std::move(labels));
}

Poset chain(int n) {
  check_capacity(n, Poset::kDefaultCapacity);
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i + 1 < n; ++i) cov.push_back({i, i + 1});
  return poset_from_covers(n, cov);
}

Poset antichain(int n) {
  check_capacity(n, Poset::kDefaultCapacity);
  return poset_from_covers(n, {});
}

std::optional<int> Poset::least() const {
  for (int i = 0; i < n_; ++i)
    if (up_[i].count() == n_) return i;
  return std::nullopt;
}

std::optional<int> Poset::greatest() const {
  for (int i = 0; i < n_; ++i)
    if (down_[i].count() == n_) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j || !le(i, j)) continue;
      Bits between = up_[i] & down_[j];
      between.reset(i);
      between.reset(j);
      if (between.none()) out.push_back({i, j});
    }
  return out;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> out;
  Bits placed(n_);
  for (int step = 0; step < n_; ++step) {
    for (int i = 0; i < n_; ++i) {
      if (placed.test(i)) continue;
      Bits below = down_[i];
      below.reset(i);
      if (below.subset_of(placed)) {
        out.push_back(i);
        placed.set(i);
        break;
      }
    }
  }
  return out;
}

Bits downset(const Poset& p, int a) { return p.down(a); }

Bits strict_downset(const Poset& p, int a) {
  Bits b = p.down(a);
  b.reset(a);
  return b;
}

Bits upset(const Poset& p, int a) { return p.up(a); }

namespace {

// The order-minimum of `candidates`, if any: candidates are tried in
// ascending index order and the first one below all others wins.
std::optional<int> least_member(const Poset& p, Bits candidates) {
  Bits rest = candidates;
  for (int u = rest.lowest(); u != -1; u = rest.lowest()) {
    if (candidates.subset_of(p.up(u))) return u;
    rest.reset(u);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> lub(const Poset& p, const Bits& s) {
  const int n = p.size();
  if (s.none()) return p.least();
  Bits ub = full_mask(n);
  s.for_each([&](int x) { ub &= p.up(x); });
  return least_member(p, std::move(ub));
}

std::optional<int> lub_pair(const Poset& p, int a, int b) {
  return least_member(p, p.up(a) & p.up(b));
}

Bits join_irreducibles(const Poset& p) {
  const int n = p.size();
  Bits out(n);
  for (int i = 0; i < n; ++i) {
    auto l = lub(p, strict_downset(p, i));
    // Reducible exactly when the lub of everything strictly below i is i
    // itself (for minimal i that lub is the least element, i.e. the empty join).
    if (!(l && *l == i)) out.set(i);
  }
  return out;
}

Bits jp(const Poset& p, int a) { return join_irreducibles(p) & p.down(a); }

bool is_chain(const Poset& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.incomparable(i, j)) return false;
  return true;
}

bool is_antichain(const Poset& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.lt(i, j)) return false;
  return true;
}

bool is_tree(const Poset& p) {
  if (!p.least()) return false;
  const int n = p.size();
  for (int a = 0; a < n; ++a) {
    auto elems = p.down(a).to_vector();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        if (p.incomparable(elems[i], elems[j])) return false;
  }
  return true;
}

bool is_join_semilattice(const Poset& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!lub_pair(p, i, j)) return false;
  return true;
}

bool is_lattice(const Poset& p) {
  // A finite join-semilattice with a least element has all meets as well.
  return p.least().has_value() && is_join_semilattice(p);
}

int width(const Poset& p) {
  const int n = p.size();
  std::vector<int> match_right(n, -1);
  std::vector<char> seen(n, 0);
  // Kuhn's augmenting paths over the strict-order bipartite graph.
  std::function<bool(int)> try_augment = [&](int i) -> bool {
    for (int j = 0; j < n; ++j) {
      if (!p.lt(i, j) || seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] == -1 || try_augment(match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    if (try_augment(i)) ++matching;
  }
  return n - matching;  // Dilworth: max antichain = min chain cover
}

Poset subposet(const Poset& p, const Bits& keep, std::vector<int>* index_map) {
  auto old_ids = keep.to_vector();
  const int m = int(old_ids.size());
  if (m == 0) throw InvalidSpec("subposet must be nonempty");
  std::vector<Bits> up(m, Bits(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = p.label(old_ids[a]);
    for (int b = 0; b < m; ++b)
      if (p.le(old_ids[a], old_ids[b])) up[a].set(b);
  }
  if (index_map) *index_map = old_ids;
  return Poset::from_rows(std::move(up), std::move(labels));
}

// Breadth -------------------------------------------------------------------

namespace {

// Searches for a violating (b+1)-tuple pair: x_i <= y_j for all i != j while
// x_i !<= y_i for every i. In any violation the x_i are pairwise distinct, the
// y_i are pairwise distinct and no component is the least element, so pairs
// are chosen in strictly increasing (x*n + y) code order.
struct BreadthSearch {
  const Poset& p;
  BudgetClock& clock;
  int k = 0;  // pairs needed = b + 1
  std::vector<int> xs, ys;
  bool aborted = false;

  BreadthSearch(const Poset& pp, BudgetClock& c) : p(pp), clock(c) {}

  bool dfs(int depth, int min_code, const Bits& down_y, const Bits& up_x) {
    if (depth == k) return true;
    const int n = p.size();
    // Remaining choices need enough fresh x and y candidates.
    Bits xc = down_y;
    for (int x : xs) xc.reset(x);
    Bits yc = up_x;
    for (int y : ys) yc.reset(y);
    int need = k - depth;
    if (xc.count() < need || yc.count() < need) return false;
    for (int code = min_code; code < n * n; ++code) {
      int x = code / n, y = code % n;
      if (!xc.test(x) || !yc.test(y) || p.le(x, y)) continue;
      if (!clock.tick()) {
        aborted = true;
        return false;
      }
      xs.push_back(x);
      ys.push_back(y);
      Bits dy = down_y & p.down(y);
      Bits ux = up_x & p.up(x);
      if (dfs(depth + 1, code + 1, dy, ux)) return true;
      xs.pop_back();
      ys.pop_back();
      if (aborted) return false;
    }
    return false;
  }

  bool violation_exists(int b) {
    k = b + 1;
    xs.clear();
    ys.clear();
    const int n = p.size();
    Bits all = full_mask(n);
    if (auto z = p.least()) all.reset(*z);
    return dfs(0, 0, all, all);
  }
};

}  // namespace

CountResult breadth(const Poset& p, Budget budget) {
  BudgetClock clock(budget);
  if (p.size() == 1) return {1, true, clock.stats()};
  BreadthSearch search(p, clock);
  for (int b = 1; b <= p.size(); ++b) {
    bool viol = search.violation_exists(b);
    if (search.aborted) return {b, false, clock.stats()};
    if (!viol) return {b, true, clock.stats()};
  }
  throw InternalError("breadth search failed to terminate");
}

CountResult breadth_join(const Poset& p, Budget budget) {
  BudgetClock clock(budget);
  const int n = p.size();
  if (!is_join_semilattice(p))
    throw NotJoinSemilattice("breadth_join requires a join-semilattice");
  if (n == 1) return {1, true, clock.stats()};

  std::vector<std::vector<int>> join(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) join[i][j] = *lub_pair(p, i, j);

  auto ji = join_irreducibles(p).to_vector();
  // Breadth = maximum size of an irredundant join-set; the maximum is attained
  // on join-irreducibles, and subsets of irredundant sets stay irredundant, so
  // plain DFS with the irredundancy test as the extension filter is complete.
  int best = 1;
  bool aborted = false;
  std::vector<int> chosen;
  std::vector<int> others;  // join of chosen \ {chosen[i]}, -1 when empty
  int join_all = -1;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (aborted) return;
    for (std::size_t t = from; t < ji.size(); ++t) {
      int z = ji[t];
      if (!clock.tick()) {
        aborted = true;
        return;
      }
      if (join_all != -1 && p.le(z, join_all)) continue;  // z redundant
      bool ok = true;
      for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
        int rest = others[i] == -1 ? z : join[others[i]][z];
        if (p.le(chosen[i], rest)) ok = false;  // chosen[i] redundant
      }
      if (!ok) continue;
      std::vector<int> saved_others = others;
      int saved_all = join_all;
      for (std::size_t i = 0; i < others.size(); ++i)
        others[i] = others[i] == -1 ? z : join[others[i]][z];
      others.push_back(saved_all);
      chosen.push_back(z);
      join_all = join_all == -1 ? z : join[join_all][z];
      best = std::max(best, int(chosen.size()));
      dfs(t + 1);
      chosen.pop_back();
      others = std::move(saved_others);
      join_all = saved_all;
    }
  };
  dfs(0);
  return {best, !aborted, clock.stats()};
}

// Products and embeddings ----------------------------------------------------

Poset product(const Poset& a, const Poset& b, int cap) {
  const int na = a.size(), nb = b.size();
  const long long n = (long long)na * nb;
  if (n > Poset::kHardCapacity || n > cap)
    throw CapacityExceeded("product size " + std::to_string(n) +
                           " exceeds capacity " + std::to_string(cap));
  std::vector<Bits> up(n, Bits(int(n)));
  std::vector<std::string> labels(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      int id = i * nb + j;
      labels[id] = "(" + a.label(i) + "," + b.label(j) + ")";
      for (int i2 = 0; i2 < na; ++i2) {
        if (!a.le(i, i2)) continue;
        for (int j2 = 0; j2 < nb; ++j2)
          if (b.le(j, j2)) up[id].set(i2 * nb + j2);
      }
    }
  return Poset::from_rows(std::move(up), std::move(labels));
}

bool is_embedding(const Poset& p, const Poset& q, const std::vector<int>& f) {
  const int n = p.size();
  if (int(f.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (f[i] < 0 || f[i] >= q.size()) return false;
    for (int j = 0; j < n; ++j) {
      if (i != j && f[i] == f[j]) return false;
      if (p.le(i, j) != q.le(f[i], f[j])) return false;
    }
  }
  return true;
}

EmbedResult embeds(const Poset& p, const Poset& q, Budget budget) {
  BudgetClock clock(budget);
  EmbedResult res;
  if (p.size() > q.size()) {
    res.status = SearchStatus::Exhausted;
    res.stats = clock.stats();
    return res;
  }
  auto order = p.linear_extension();
  std::vector<int> f(p.size(), -1);
  std::vector<char> used(q.size(), 0);
  bool aborted = false;
  std::function<bool(std::size_t)> dfs = [&](std::size_t d) -> bool {
    if (d == order.size()) return true;
    int v = order[d];
    for (int c = 0; c < q.size(); ++c) {
      if (used[c]) continue;
      if (!clock.tick()) {
        aborted = true;
        return false;
      }
      bool ok = true;
      for (std::size_t e = 0; e < d && ok; ++e) {
        int w = order[e];
        if (p.le(v, w) != q.le(c, f[w]) || p.le(w, v) != q.le(f[w], c)) ok = false;
      }
      if (!ok) continue;
      f[v] = c;
      used[c] = 1;
      if (dfs(d + 1)) return true;
      used[c] = 0;
      f[v] = -1;
      if (aborted) return false;
    }
    return false;
  };
  if (dfs(0)) {
    if (!is_embedding(p, q, f)) throw InternalError("embeds produced a bad map");
    res.status = SearchStatus::Found;
    res.map = f;
  } else {
    res.status = aborted ? SearchStatus::Budget : SearchStatus::Exhausted;
  }
  res.stats = clock.stats();
  return res;
}

}  // namespace posetlab

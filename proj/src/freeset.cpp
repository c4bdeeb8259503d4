#include "posetlab/freeset.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "posetlab/cubes.hpp"
#include "posetlab/errors.hpp"

namespace posetlab {

namespace {

std::uint64_t full_of(int m) { return m == 64 ? ~0ull : (1ull << m) - 1; }

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// All subsets of `ground_mask` with exactly k elements, increasing value order.
template <class F>
void for_each_k_subset(std::uint64_t ground_mask, int k, F f) {
  std::vector<int> bits;
  for (std::uint64_t m = ground_mask; m; m &= m - 1)
    bits.push_back(__builtin_ctzll(m));
  const int n = int(bits.size());
  if (k > n) return;
  if (k == 0) {
    f(std::uint64_t(0));
    return;
  }
  std::vector<int> idx(k);
  std::function<void(int, int)> walk = [&](int start, int depth) {
    if (depth == k) {
      std::uint64_t mask = 0;
      for (int i : idx) mask |= 1ull << bits[i];
      f(mask);
      return;
    }
    for (int v = start; v < n; ++v) {
      idx[depth] = v;
      walk(v + 1, depth + 1);
    }
  };
  walk(0, 0);
}

template <class F>
void for_each_subset_up_to(std::uint64_t ground_mask, int r, F f) {
  for (int k = 0; k <= r && k <= popcount(ground_mask); ++k)
    for_each_k_subset(ground_mask, k, f);
}

unsigned long long count_keys(int n, int r) {
  unsigned long long total = 0;
  for (int k = 0; k <= r && k <= n; ++k) {
    unsigned long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    total += c;
    if (total > 2'000'000) break;
  }
  return total;
}

void check_table_scale(int n, int r) {
  if (count_keys(n, r) > 200'000)
    throw CapacityExceeded("set-mapping table would be too large");
}

}  // namespace

SetMapping::SetMapping(int ground, int order) : ground_(ground), order_(order) {
  if (ground < 1 || ground > 64)
    throw InvalidSpec("set mapping ground set must have 1..64 elements");
  if (order < 1 || order > ground)
    throw InvalidSpec("set mapping order must lie in [1, ground]");
}

std::uint64_t SetMapping::ground_mask() const { return full_of(ground_); }

std::uint64_t SetMapping::value(std::uint64_t key) const {
  if (key & ~ground_mask()) throw InvalidArgs("key outside the ground set");
  if (popcount(key) > order_) throw InvalidArgs("key larger than the order");
  auto it = table_.find(key);
  return it == table_.end() ? 0 : it->second;
}

void SetMapping::set(std::uint64_t key, std::uint64_t val) {
  if (key & ~ground_mask()) throw InvalidArgs("key outside the ground set");
  if (popcount(key) > order_) throw InvalidArgs("key larger than the order");
  if (val & ~ground_mask()) throw InvalidArgs("value outside the ground set");
  if (val == 0)
    table_.erase(key);
  else
    table_[key] = val;
}

std::uint64_t SetMapping::hull(std::uint64_t x) const {
  if (x & ~ground_mask()) throw InvalidArgs("argument outside the ground set");
  std::uint64_t out = 0;
  for (const auto& [k, v] : table_)
    if ((k & ~x) == 0) out |= v;
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> SetMapping::entries() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out(table_.begin(),
                                                           table_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return popcount(a.first) < popcount(b.first);
  });
  return out;
}

bool SetMapping::operator==(const SetMapping& o) const {
  return ground_ == o.ground_ && order_ == o.order_ && table_ == o.table_;
}

bool is_free(const SetMapping& f, std::uint64_t h) {
  if (h & ~f.ground_mask()) throw InvalidArgs("set outside the ground set");
  bool free = true;
  for_each_subset_up_to(h, f.order(), [&](std::uint64_t x) {
    if (free && (f.value(x) & h & ~x)) free = false;
  });
  return free;
}

bool is_free_order_r(const SetMapping& f, std::uint64_t h) {
  if (h & ~f.ground_mask()) throw InvalidArgs("set outside the ground set");
  bool free = true;
  for_each_k_subset(h, f.order(), [&](std::uint64_t x) {
    if (free && (f.value(x) & h & ~x)) free = false;
  });
  return free;
}

FindFreeResult find_free(const SetMapping& f, int m, Budget budget) {
  BudgetClock clock(budget);
  FindFreeResult res;
  if (m < 0) throw InvalidArgs("free-set size must be non-negative");
  if (m == 0) {
    res.status = SearchStatus::Found;
    res.stats = clock.stats();
    return res;
  }
  const int n = f.ground();
  if (m > n) {
    res.status = SearchStatus::Exhausted;
    res.stats = clock.stats();
    return res;
  }
  bool aborted = false;
  std::uint64_t witness = 0;
  // Elements join in ascending order; `forbidden` collects F(X)\X over all
  // X inside the current partial set, so any extension must avoid it.
  std::function<bool(int, std::uint64_t, std::uint64_t)> dfs =
      [&](int next, std::uint64_t h, std::uint64_t forbidden) -> bool {
    if (popcount(h) == m) {
      witness = h;
      return true;
    }
    for (int e = next; e < n; ++e) {
      if (n - e < m - popcount(h)) break;
      if (!clock.tick()) {
        aborted = true;
        return false;
      }
      std::uint64_t bit = 1ull << e;
      if (forbidden & bit) continue;
      std::uint64_t nh = h | bit;
      bool ok = true;
      std::uint64_t nf = forbidden;
      // New constraints: subsets through the new element.
      for_each_subset_up_to(h, f.order() - 1, [&](std::uint64_t x) {
        if (!ok) return;
        std::uint64_t key = x | bit;
        std::uint64_t val = f.value(key);
        if (val & nh & ~key) ok = false;
        nf |= val & ~key;
      });
      if (ok && dfs(e + 1, nh, nf)) return true;
      if (aborted) return false;
    }
    return false;
  };
  if (dfs(0, 0, f.value(0))) {
    if (!is_free(f, witness))
      throw InternalError("free-set witness failed verification");
    res.status = SearchStatus::Found;
    res.witness = witness;
  } else {
    res.status = aborted ? SearchStatus::Budget : SearchStatus::Exhausted;
  }
  res.stats = clock.stats();
  return res;
}

SetMapping isotone_closure(const SetMapping& f) {
  check_table_scale(f.ground(), f.order());
  SetMapping g(f.ground(), f.order());
  for_each_subset_up_to(f.ground_mask(), f.order(),
                        [&](std::uint64_t x) { g.set(x, f.hull(x)); });
  return g;
}

ReductionReport check_free_reduction(const SetMapping& f, std::uint64_t h) {
  if (h & ~f.ground_mask()) throw InvalidArgs("set outside the ground set");
  const int r = f.order();
  if (popcount(h) <= r)
    throw InvalidArgs("reduction check requires |H| > r");
  ReductionReport rep;
  rep.free_all = is_free(f, h);
  rep.free_order_r = is_free_order_r(f, h);
  // The derivation route: every argument of size < r is an intersection of
  // r-sets inside H, and the mapping must respect those containments.
  rep.decomposition_ok = true;
  for_each_subset_up_to(h, r - 1, [&](std::uint64_t x) {
    if (!rep.decomposition_ok) return;
    auto parts = intersection_decomposition(x, h, r);
    std::uint64_t vx = f.value(x);
    for (auto y : parts)
      if (vx & ~f.value(y)) {
        rep.decomposition_ok = false;  // an isotonicity link is missing
        return;
      }
  });
  return rep;
}

// Finite leadsto shadows ------------------------------------------------------

namespace {

bool shadow_condition_holds(const Poset& p, const SetMapping& f,
                            const std::vector<int>& map,
                            const std::vector<Bits>& index_sets) {
  const int n = p.size();
  std::vector<std::uint64_t> img(n, 0), hull(n, 0);
  for (int x = 0; x < n; ++x) {
    index_sets[x].for_each([&](int w) { img[x] |= 1ull << map[w]; });
    hull[x] = f.hull(img[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.le(x, y) && (hull[x] & img[y] & ~img[x])) return false;
  return true;
}

FreeEmbedding shadow_search(const Poset& p, const SetMapping& f,
                            Budget budget, const std::vector<Bits>& index_sets,
                            const std::vector<int>& carriers) {
  // index_sets[x]: the carrier elements whose images constitute img(x);
  // carriers: the elements receiving images, in assignment order.
  BudgetClock clock(budget);
  FreeEmbedding res;
  const int n = p.size();
  const int g = f.ground();
  if (int(carriers.size()) > g) {
    res.status = SearchStatus::Exhausted;
    res.stats = clock.stats();
    return res;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(g, 0);
  std::vector<int> remaining(n, 0);  // unassigned carriers within index_sets[x]
  for (int x = 0; x < n; ++x) remaining[x] = index_sets[x].count();
  std::vector<std::uint64_t> img(n, 0), hull(n, 0);
  std::vector<char> complete(n, 0);
  for (int x = 0; x < n; ++x)
    if (remaining[x] == 0) {
      hull[x] = f.hull(0);
      complete[x] = 1;
    }

  bool aborted = false;
  std::function<bool(std::size_t)> dfs = [&](std::size_t d) -> bool {
    if (d == carriers.size()) return true;
    int u = carriers[d];
    for (int c = 0; c < g; ++c) {
      if (used[c]) continue;
      if (!clock.tick()) {
        aborted = true;
        return false;
      }
      map[u] = c;
      used[c] = 1;
      std::vector<int> completed;
      bool ok = true;
      for (int y = 0; y < n; ++y) {
        if (!index_sets[y].test(u)) continue;
        if (--remaining[y] == 0) {
          complete[y] = 1;
          completed.push_back(y);
          if (!ok) continue;
          img[y] = 0;
          index_sets[y].for_each([&](int w) { img[y] |= 1ull << map[w]; });
          hull[y] = f.hull(img[y]);
          // All lower index sets are complete; check both directions.
          for (int x = 0; x < n && ok; ++x) {
            if (!complete[x] || x == y) continue;
            if (p.le(x, y) && (hull[x] & img[y] & ~img[x])) ok = false;
            if (p.le(y, x) && (hull[y] & img[x] & ~img[y])) ok = false;
          }
        }
      }
      if (ok && dfs(d + 1)) return true;
      for (int y : completed) complete[y] = 0;
      for (int y = 0; y < n; ++y)
        if (index_sets[y].test(u)) ++remaining[y];
      used[c] = 0;
      map[u] = -1;
      if (aborted) return false;
    }
    return false;
  };

  if (dfs(0)) {
    if (!shadow_condition_holds(p, f, map, index_sets))
      throw InternalError("shadow witness failed verification");
    res.status = SearchStatus::Found;
    res.map = map;
  } else {
    res.status = aborted ? SearchStatus::Budget : SearchStatus::Exhausted;
  }
  res.stats = clock.stats();
  return res;
}

}  // namespace

FreeEmbedding leadsto_shadow(const Poset& p, const SetMapping& f,
                             Budget budget) {
  const int n = p.size();
  std::vector<Bits> index_sets;
  index_sets.reserve(n);
  for (int x = 0; x < n; ++x) index_sets.push_back(p.down(x));
  return shadow_search(p, f, budget, index_sets, p.linear_extension());
}

JiShadowReport ji_shadow_check(const Poset& p, const SetMapping& f,
                               Budget budget) {
  JiShadowReport rep;
  rep.full = leadsto_shadow(p, f, budget);
  const int n = p.size();
  Bits j = join_irreducibles(p);
  std::vector<Bits> index_sets;
  index_sets.reserve(n);
  for (int x = 0; x < n; ++x) index_sets.push_back(j & p.down(x));
  std::vector<int> carriers;
  for (int v : p.linear_extension())
    if (j.test(v)) carriers.push_back(v);
  rep.ji = shadow_search(p, f, budget, index_sets, carriers);
  return rep;
}

// Configurations --------------------------------------------------------------

namespace {

struct ConfigPredicate {
  // stronger=false: the pairwise clauses plus eta_i notin F({xi_0,xi_1,xi_2});
  // stronger=true:  pairwise xi clause plus eta_i notin F(Xi + {eta_j}).
  bool stronger = false;

  bool pair_clause(const SetMapping& f, int xi_i, int eta_i, int xi_j,
                   int eta_j) const {
    std::uint64_t key = (1ull << xi_j) | (1ull << eta_j);
    std::uint64_t val = f.hull(key);
    if (val & (1ull << xi_i)) return false;
    if (!stronger && (val & (1ull << eta_i))) return false;
    return true;
  }

  bool final_clause(const SetMapping& f, const std::array<int, 3>& xi,
                    const std::array<int, 3>& eta) const {
    std::uint64_t xis = (1ull << xi[0]) | (1ull << xi[1]) | (1ull << xi[2]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        std::uint64_t key = stronger ? (xis | (1ull << eta[j])) : xis;
        if (f.hull(key) & (1ull << eta[i])) return false;
      }
    return true;
  }

  bool holds(const SetMapping& f, const std::array<int, 3>& xi,
             const std::array<int, 3>& eta) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && !pair_clause(f, xi[i], eta[i], xi[j], eta[j]))
          return false;
    return final_clause(f, xi, eta);
  }
};

ConfigResult config_search(const SetMapping& f, Budget budget, bool stronger) {
  BudgetClock clock(budget);
  ConfigResult res;
  const int g = f.ground();
  ConfigPredicate pred{stronger};
  if (g < 6) {
    res.status = SearchStatus::Exhausted;
    res.stats = clock.stats();
    return res;
  }
  std::array<int, 3> xi{}, eta{};
  bool aborted = false;
  // The clauses are invariant under permuting the pair index, so pairs are
  // enumerated with strictly increasing xi.
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == 3) return pred.final_clause(f, xi, eta);
    for (int x = (k == 0 ? 0 : xi[k - 1] + 1); x < g; ++x) {
      for (int e = 0; e < g; ++e) {
        bool distinct = e != x;
        for (int t = 0; t < k && distinct; ++t)
          if (e == xi[t] || e == eta[t] || x == eta[t]) distinct = false;
        if (!distinct) continue;
        if (!clock.tick()) {
          aborted = true;
          return false;
        }
        xi[k] = x;
        eta[k] = e;
        bool ok = true;
        for (int t = 0; t < k && ok; ++t)
          ok = pred.pair_clause(f, xi[k], eta[k], xi[t], eta[t]) &&
               pred.pair_clause(f, xi[t], eta[t], xi[k], eta[k]);
        if (ok && place(k + 1)) return true;
        if (aborted) return false;
      }
    }
    return false;
  };
  if (place(0)) {
    if (!pred.holds(f, xi, eta))
      throw InternalError("configuration witness failed verification");
    res.status = SearchStatus::Found;
    res.xi = xi;
    res.eta = eta;
  } else {
    res.status = aborted ? SearchStatus::Budget : SearchStatus::Exhausted;
  }
  res.stats = clock.stats();
  return res;
}

}  // namespace

ConfigResult config_search_p(const SetMapping& f, Budget budget) {
  return config_search(f, budget, false);
}

ConfigResult config_search_q(const SetMapping& f, Budget budget) {
  return config_search(f, budget, true);
}

// Generators ------------------------------------------------------------------

SetMapping cyclic_shift_mapping(int ground, int order, int shift) {
  check_table_scale(ground, order);
  SetMapping f(ground, order);
  for_each_subset_up_to(f.ground_mask(), order, [&](std::uint64_t x) {
    if (!x) return;
    std::uint64_t y = 0;
    for (std::uint64_t m = x; m; m &= m - 1) {
      int b = __builtin_ctzll(m);
      y |= 1ull << ((b + shift) % ground + ground) % ground;
    }
    f.set(x, y & ~x);
  });
  return f;
}

SetMapping block_smallest_mapping(int ground, int order) {
  check_table_scale(ground, order);
  SetMapping f(ground, order);
  for_each_subset_up_to(f.ground_mask(), order, [&](std::uint64_t x) {
    if (!x) return;
    std::uint64_t rest = f.ground_mask() & ~x;
    if (rest) f.set(x, rest & (~rest + 1));
  });
  return f;
}

SetMapping random_mapping(int ground, int order, double density,
                          std::uint64_t seed) {
  if (density < 0.0 || density > 1.0)
    throw InvalidArgs("density must lie in [0, 1]");
  check_table_scale(ground, order);
  SetMapping f(ground, order);
  std::mt19937_64 rng(seed);
  // Raw 53-bit draws keep the stream identical across standard libraries.
  auto coin = [&]() { return double((rng() >> 11)) * 0x1.0p-53 < density; };
  for_each_subset_up_to(f.ground_mask(), order, [&](std::uint64_t x) {
    if (!x) return;
    std::uint64_t y = 0;
    for (int b = 0; b < ground; ++b)
      if (coin()) y |= 1ull << b;
    f.set(x, y);
  });
  return f;
}

}  // namespace posetlab

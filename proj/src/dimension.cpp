#include "posetlab/dimension.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "posetlab/cubes.hpp"

namespace posetlab {

bool is_linear_extension(const Poset& p, const LinearExtension& ext) {
  const int n = p.size();
  if (int(ext.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    if (ext[k] < 0 || ext[k] >= n || pos[ext[k]] != -1) return false;
    pos[ext[k]] = k;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.lt(i, j) && pos[i] > pos[j]) return false;
  return true;
}

bool is_realizer(const Poset& p, const Realizer& r) {
  const int n = p.size();
  if (r.empty()) return false;
  std::vector<std::vector<int>> pos;
  for (const auto& ext : r) {
    if (!is_linear_extension(p, ext)) return false;
    std::vector<int> q(n);
    for (int k = 0; k < n; ++k) q[ext[k]] = k;
    pos.push_back(std::move(q));
  }
  // Every non-relation must be broken by some extension.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || p.le(i, j)) continue;
      bool broken = false;
      for (const auto& q : pos)
        if (q[j] < q[i]) { broken = true; break; }
      if (!broken) return false;
    }
  return true;
}

std::vector<std::pair<int, int>> critical_pairs(const Poset& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.incomparable(a, b)) continue;
      Bits ub = p.up(b);
      ub.reset(b);
      if (strict_downset(p, a).subset_of(p.down(b)) && ub.subset_of(p.up(a)))
        out.push_back({a, b});
    }
  return out;
}

int dim_upper_width(const Poset& p) {
  Bits j = join_irreducibles(p);
  if (j.none()) return 1;
  return std::max(1, width(subposet(p, j)));
}

namespace {

// One realizer bucket: the transitive closure of <=_P together with the
// reversals b -> a of every pair (a, b) placed in the bucket.
struct BucketRelation {
  std::vector<Bits> up;

  explicit BucketRelation(const Poset& p) {
    up.reserve(p.size());
    for (int i = 0; i < p.size(); ++i) up.push_back(p.up(i));
  }

  bool le(int x, int y) const { return up[x].test(y); }

  // Inserts the reversal b -> a; fails (leaving the rows untouched) when the
  // reversal would close a cycle, i.e. when a <= b already holds here.
  bool insert_reversal(int a, int b) {
    if (le(a, b)) return false;
    const int n = int(up.size());
    for (int x = 0; x < n; ++x)
      if (up[x].test(b)) up[x] |= up[a];
    return true;
  }

  LinearExtension extension() const {
    const int n = int(up.size());
    LinearExtension ext(n);
    std::iota(ext.begin(), ext.end(), 0);
    std::stable_sort(ext.begin(), ext.end(), [&](int x, int y) {
      return up[x].count() > up[y].count();
    });
    return ext;
  }
};

struct DimSolver {
  const Poset& p;
  BudgetClock& clock;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Bits> conflict;  // pairwise: both reversals together force a cycle
  bool aborted = false;

  DimSolver(const Poset& pp, BudgetClock& c, bool critical_only)
      : p(pp), clock(c) {
    if (critical_only) {
      pairs = critical_pairs(p);
    } else {
      for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
          if (a != b && p.incomparable(a, b)) pairs.push_back({a, b});
    }
    const int k = int(pairs.size());
    conflict.assign(k, Bits(k));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        auto [a, b] = pairs[i];
        auto [c, d] = pairs[j];
        if (p.le(a, d) && p.le(c, b)) {
          conflict[i].set(j);
          conflict[j].set(i);
        }
      }
    // Most-constrained pairs first.
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
      return conflict[i].count() > conflict[j].count();
    });
    std::vector<std::pair<int, int>> ps(k);
    std::vector<Bits> cf(k, Bits(k));
    for (int i = 0; i < k; ++i) ps[i] = pairs[order[i]];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (conflict[order[i]].test(order[j])) cf[i].set(j);
    pairs = std::move(ps);
    conflict = std::move(cf);
  }

  int clique_lower() const {
    const int k = int(pairs.size());
    if (k == 0) return 1;
    int best = 1;
    for (int seed = 0; seed < k; ++seed) {
      std::vector<int> clique{seed};
      Bits common = conflict[seed];
      while (common.any()) {
        int pick = -1, deg = -1;
        common.for_each([&](int v) {
          int d = (conflict[v] & common).count();
          if (d > deg) { deg = d; pick = v; }
        });
        clique.push_back(pick);
        common &= conflict[pick];
      }
      best = std::max(best, int(clique.size()));
    }
    return std::max(best, 2);  // any incomparable pair already forces 2
  }

  // First-fit cover; always succeeds and certifies an upper bound.
  std::vector<BucketRelation> greedy_cover() const {
    std::vector<BucketRelation> buckets;
    for (auto [a, b] : pairs) {
      bool placed = false;
      for (auto& bucket : buckets)
        if (bucket.insert_reversal(a, b)) { placed = true; break; }
      if (!placed) {
        buckets.emplace_back(p);
        if (!buckets.back().insert_reversal(a, b))
          throw InternalError("single reversal must be insertable");
      }
    }
    if (buckets.empty()) buckets.emplace_back(p);
    return buckets;
  }

  // Exhaustive: can all pairs be packed into t buckets? Buckets are
  // interchangeable, so a pair may open at most the first unused bucket.
  bool solve(int t, std::vector<BucketRelation>& out) {
    std::vector<BucketRelation> cur;
    std::vector<Bits> conflict_mask(t, Bits(int(pairs.size())));
    std::function<bool(int)> dfs = [&](int idx) -> bool {
      if (idx == int(pairs.size())) return true;
      auto [a, b] = pairs[idx];
      int limit = std::min(t, int(cur.size()) + 1);
      for (int bk = 0; bk < limit; ++bk) {
        if (bk < int(cur.size()) && conflict_mask[bk].test(idx)) continue;
        if (!clock.tick()) { aborted = true; return false; }
        bool fresh = bk == int(cur.size());
        if (fresh) cur.emplace_back(p);
        BucketRelation saved = cur[bk];
        Bits saved_mask = conflict_mask[bk];
        if (cur[bk].insert_reversal(a, b)) {
          conflict_mask[bk] |= conflict[idx];
          if (dfs(idx + 1)) return true;
          conflict_mask[bk] = saved_mask;
        }
        if (fresh)
          cur.pop_back();
        else
          cur[bk] = std::move(saved);
        if (aborted) return false;
      }
      return false;
    };
    if (dfs(0)) {
      while (int(cur.size()) < t) cur.emplace_back(p);
      out = std::move(cur);
      return true;
    }
    return false;
  }
};

Realizer extract_realizer(const Poset& p,
                          const std::vector<BucketRelation>& buckets) {
  Realizer r;
  for (const auto& bucket : buckets) r.push_back(bucket.extension());
  if (!is_realizer(p, r)) throw InternalError("extracted family is no realizer");
  return r;
}

}  // namespace

DimResult dim_exact(const Poset& p, Budget budget, DimOptions opts) {
  BudgetClock clock(budget);
  DimResult res;
  if (is_chain(p)) {
    res.lower = res.upper = 1;
    res.witness = {p.linear_extension()};
    res.stats = clock.stats();
    return res;
  }
  DimSolver solver(p, clock, opts.critical_pairs_only);
  int lo = std::max(solver.clique_lower(), std::max(opts.known_lower, 2));
  auto greedy = solver.greedy_cover();
  int hi = int(greedy.size());
  Realizer witness = extract_realizer(p, greedy);

  for (int t = lo; t < hi; ++t) {
    std::vector<BucketRelation> found;
    if (solver.solve(t, found)) {
      hi = t;
      witness = extract_realizer(p, found);
      break;
    }
    if (solver.aborted) break;
    lo = t + 1;  // exhausted: dim > t certified
  }
  res.lower = std::min(lo, hi);
  res.upper = hi;
  res.witness = std::move(witness);
  res.stats = clock.stats();
  return res;
}

// Suitable families ----------------------------------------------------------

bool is_suitable(int m, int r, const SuitableFamily& fam) {
  if (m < 1 || r < 1 || r > m) return false;
  std::vector<std::vector<int>> pos;
  for (const auto& s : fam) {
    if (int(s.size()) != m) return false;
    std::vector<int> q(m, -1);
    for (int k = 0; k < m; ++k) {
      if (s[k] < 0 || s[k] >= m || q[s[k]] != -1) return false;
      q[s[k]] = k;
    }
    pos.push_back(std::move(q));
  }
  // Every A in [m]^r and a in A: some ordering places all of A at or below a.
  std::vector<int> a_set(r);
  std::function<bool(int, int)> walk = [&](int start, int depth) -> bool {
    if (depth == r) {
      for (int a : a_set) {
        bool covered = false;
        for (const auto& q : pos) {
          bool top = true;
          for (int x : a_set)
            if (q[x] > q[a]) { top = false; break; }
          if (top) { covered = true; break; }
        }
        if (!covered) return false;
      }
      return true;
    }
    for (int v = start; v < m; ++v) {
      a_set[depth] = v;
      if (!walk(v + 1, depth + 1)) return false;
    }
    return true;
  };
  return walk(0, 0);
}

namespace {

struct Requirement {
  std::vector<int> a_set;
  int a = 0;
};

std::vector<Requirement> all_requirements(int m, int r) {
  std::vector<Requirement> reqs;
  std::vector<int> a_set(r);
  std::function<void(int, int)> walk = [&](int start, int depth) {
    if (depth == r) {
      for (int a : a_set) reqs.push_back({a_set, a});
      return;
    }
    for (int v = start; v < m; ++v) {
      a_set[depth] = v;
      walk(v + 1, depth + 1);
    }
  };
  walk(0, 0);
  return reqs;
}

Bits coverage_mask(const std::vector<int>& perm,
                   const std::vector<Requirement>& reqs) {
  const int m = int(perm.size());
  std::vector<int> pos(m);
  for (int k = 0; k < m; ++k) pos[perm[k]] = k;
  Bits mask(int(reqs.size()));
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    bool top = true;
    for (int x : reqs[i].a_set)
      if (pos[x] > pos[reqs[i].a]) { top = false; break; }
    if (top) mask.set(int(i));
  }
  return mask;
}

}  // namespace

SuitableResult n_suitable_exact(int m, int r, Budget budget, int m_cap) {
  if (m < 1 || r < 1 || r > m)
    throw InvalidArgs("n_suitable_exact requires 1 <= r <= m");
  if (m > m_cap)
    throw InvalidArgs("n_suitable_exact supports m <= " + std::to_string(m_cap));
  BudgetClock clock(budget);
  SuitableResult res;

  auto reqs = all_requirements(m, r);
  const int nreq = int(reqs.size());

  std::vector<int> identity(m);
  std::iota(identity.begin(), identity.end(), 0);

  // Any optimal family can be relabeled so that one member becomes the
  // identity ordering (relabeling permutes the requirements bijectively),
  // so the identity is pinned as the first member.
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm = identity;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  Bits base = coverage_mask(identity, reqs);

  struct Candidate {
    Bits mask;
    int perm_index;
  };
  std::vector<Candidate> cands;
  for (std::size_t t = 0; t < perms.size(); ++t) {
    Bits mask = coverage_mask(perms[t], reqs);
    mask.subtract(base);
    if (mask.none()) continue;
    bool keep = true;
    for (auto& c : cands) {
      if (mask.subset_of(c.mask)) { keep = false; break; }  // dominated
    }
    if (keep) {
      std::erase_if(cands,
                    [&](const Candidate& c) { return c.mask.subset_of(mask); });
      cands.push_back({std::move(mask), int(t)});
    }
  }

  std::vector<std::vector<int>> per_req(nreq);  // candidates covering req i
  for (std::size_t c = 0; c < cands.size(); ++c)
    cands[c].mask.for_each([&](int i) { per_req[i].push_back(int(c)); });

  bool aborted = false;
  std::vector<int> chosen;
  std::vector<int> best_choice;
  std::function<bool(const Bits&, int)> dfs = [&](const Bits& covered,
                                                  int left) -> bool {
    // Pick the uncovered requirement with the fewest covering candidates.
    int pick = -1, fan = -1;
    for (int i = 0; i < nreq; ++i) {
      if (covered.test(i)) continue;
      int f = int(per_req[i].size());
      if (pick == -1 || f < fan) { pick = i; fan = f; }
    }
    if (pick == -1) return true;
    if (left == 0) return false;
    for (int c : per_req[pick]) {
      if (!clock.tick()) { aborted = true; return false; }
      chosen.push_back(c);
      if (dfs(covered | cands[c].mask, left - 1)) return true;
      chosen.pop_back();
      if (aborted) return false;
    }
    return false;
  };

  int start = std::max(1, r);
  for (int total = start;; ++total) {
    chosen.clear();
    if (dfs(base, total - 1)) {
      res.lower = res.upper = total;
      res.witness.push_back(identity);
      for (int c : chosen) res.witness.push_back(perms[cands[c].perm_index]);
      break;
    }
    if (aborted) {
      res.lower = total;  // all smaller sizes exhausted
      res.upper = 0;
      break;
    }
    if (total > nreq) throw InternalError("suitable search failed to terminate");
  }
  if (res.upper && !is_suitable(m, r, res.witness))
    throw InternalError("suitable witness failed verification");
  res.stats = clock.stats();
  return res;
}

SuitableCheckReport check_dim_equals_suitable(int m, int r, Budget budget) {
  if (r < 2 || r >= m)
    throw InvalidArgs("check_dim_equals_suitable requires 2 <= r < m");
  SuitableCheckReport rep;
  Poset cube = build_cube(CubeSpec::at_levels(m, {1, r}));
  DimResult d = dim_exact(cube, budget);
  SuitableResult s = n_suitable_exact(m, r + 1, budget, std::max(m, 6));
  rep.dim = d.upper;
  rep.n_suitable = s.upper ? s.upper : s.lower;
  rep.both_exact = d.exact() && s.exact();
  rep.equal = rep.both_exact && d.value() == s.value();
  rep.stats.nodes = d.stats.nodes + s.stats.nodes;
  rep.stats.ms = d.stats.ms + s.stats.ms;
  rep.stats.budget_exhausted = d.stats.budget_exhausted || s.stats.budget_exhausted;
  return rep;
}

}  // namespace posetlab

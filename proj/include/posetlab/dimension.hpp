#pragma once

#include <vector>

#include "posetlab/budget.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// A linear extension lists the elements bottom-to-top.
using LinearExtension = std::vector<int>;
// A realizer is a family of linear extensions whose intersection is <=_P.
using Realizer = std::vector<LinearExtension>;
// A suitable family is a list of linear orderings of {0..m-1}, bottom-to-top.
using SuitableFamily = std::vector<std::vector<int>>;

bool is_linear_extension(const Poset& p, const LinearExtension& ext);
bool is_realizer(const Poset& p, const Realizer& r);

struct DimOptions {
  // Reduce to critical pairs (sound + complete). Turning this off makes the
  // solver cover every incomparable ordered pair; used as a correctness guard.
  bool critical_pairs_only = true;
  // Extra registered lower bound (e.g. from an embedded subposet).
  int known_lower = 0;
};

struct DimResult {
  int lower = 1;        // certified: dim >= lower
  int upper = 1;        // certified: dim <= upper, witnessed
  Realizer witness;     // realizer of size `upper`
  SearchStats stats;
  bool exact() const { return lower == upper; }
  int value() const { return upper; }  // meaningful when exact()
};

// Exact order dimension via branch-and-bound over critical-pair bucket
// assignments (bucket feasibility = acyclicity of covers + reversed pairs).
// On budget exhaustion returns the certified interval, witness included.
DimResult dim_exact(const Poset& p, Budget budget = {}, DimOptions opts = {});

// Ordered incomparable pairs (a,b) with strict_down(a) subseteq strict_down(b)
// and strict_up(b) subseteq strict_up(a).
std::vector<std::pair<int, int>> critical_pairs(const Poset& p);

// dim(P) <= width of the subposet induced on the join-irreducibles.
int dim_upper_width(const Poset& p);

// Minimal size of a suitable family: linear orderings S of {0..m-1} such that
// for every A in [m]^r and every a in A some S puts all of A at or below a.
struct SuitableResult {
  int lower = 1;            // certified: N(m,r) >= lower
  int upper = 0;            // certified when witness nonempty
  SuitableFamily witness;
  SearchStats stats;
  bool exact() const { return lower == upper; }
  int value() const { return upper; }
};

SuitableResult n_suitable_exact(int m, int r, Budget budget = {}, int m_cap = 6);

bool is_suitable(int m, int r, const SuitableFamily& fam);

// Independent cross-check of dim B_m(1,r) == N(m, r+1) for 1 < r < m.
struct SuitableCheckReport {
  int dim = 0;
  int n_suitable = 0;
  bool both_exact = false;
  bool equal = false;
  SearchStats stats;
};

SuitableCheckReport check_dim_equals_suitable(int m, int r, Budget budget = {});

}  // namespace posetlab

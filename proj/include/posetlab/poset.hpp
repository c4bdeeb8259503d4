#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/bits.hpp"
#include "posetlab/budget.hpp"
#include "posetlab/errors.hpp"

namespace posetlab {

// Finite poset on elements 0..n-1, stored as dense up/down bit rows of the
// full (reflexive, antisymmetric, transitive) order relation.
class Poset {
 public:
  static constexpr int kDefaultCapacity = 128;
  static constexpr int kHardCapacity = 4096;

  // Truncated-cube provenance, set by the cube builders; lets consumers apply
  // known-value rules for B_m(<=r).
  struct CubeTag {
    int m = 0;
    int r = 0;
  };

  int size() const { return n_; }
  bool le(int i, int j) const { return up_[check(i)].test(check(j)); }
  bool lt(int i, int j) const { return i != j && le(i, j); }
  bool incomparable(int i, int j) const { return !le(i, j) && !le(j, i); }

  // Row views: up(i) = { j : i <= j }, down(i) = { j : j <= i }.
  const Bits& up(int i) const { return up_[check(i)]; }
  const Bits& down(int i) const { return down_[check(i)]; }

  const std::string& label(int i) const { return labels_[check(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> least() const;
  std::optional<int> greatest() const;

  const std::optional<CubeTag>& cube_tag() const { return cube_tag_; }
  void set_cube_tag(CubeTag t) { cube_tag_ = t; }

  // Cover pairs (i, j) with i covered by j (transitive reduction), lex order.
  std::vector<std::pair<int, int>> covers() const;

  // Deterministic linear extension (smallest-index minimal element first).
  std::vector<int> linear_extension() const;

  // Internal factory: rows must already be a valid order; builders use this.
  static Poset from_rows(std::vector<Bits> up, std::vector<std::string> labels);

 private:
  int check(int i) const {
    if (i < 0 || i >= n_) throw IndexOutOfRange("element index out of range");
    return i;
  }

  int n_ = 0;
  std::vector<Bits> up_, down_;
  std::vector<std::string> labels_;
  std::optional<CubeTag> cube_tag_;
};

// Builds a poset from cover pairs; computes the reflexive-transitive closure.
// Throws CycleDetected (with a witness cycle) if the cover digraph has a cycle,
// CapacityExceeded if n exceeds `cap` (or the hard limit), IndexOutOfRange for
// bad pair entries.
Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                        std::vector<std::string> labels = {},
                        int cap = Poset::kDefaultCapacity);

Poset chain(int n);
Poset antichain(int n);

// Element sets ------------------------------------------------------------

// Down-set of `a`: { x : x <= a }. Strict variant excludes `a`.
Bits downset(const Poset& p, int a);
Bits strict_downset(const Poset& p, int a);
Bits upset(const Poset& p, int a);

// Join-irreducible elements: p is excluded iff some X subseteq P\{p} has least
// upper bound p (the empty join excludes a least element).
Bits join_irreducibles(const Poset& p);

// J_P(a) = join-irreducibles below (or equal to) a.
Bits jp(const Poset& p, int a);

// Least upper bound of the elements in `s`, if it exists. lub of the empty set
// is the least element of p (if any).
std::optional<int> lub(const Poset& p, const Bits& s);
std::optional<int> lub_pair(const Poset& p, int a, int b);

// Structure predicates -----------------------------------------------------

bool is_chain(const Poset& p);
bool is_antichain(const Poset& p);
// Tree: least element exists and every down-set is a chain.
bool is_tree(const Poset& p);
// Every pair has a least upper bound.
bool is_join_semilattice(const Poset& p);
// Join semilattice with a least element (equivalently: finite lattice).
bool is_lattice(const Poset& p);

// Width via Dilworth: maximum antichain = n - maximum matching of the strict
// order's bipartite graph. Exact, polynomial.
int width(const Poset& p);

// Induced subposet on the elements of `keep`; `index_map` (optional out)
// receives old indices in new order.
Poset subposet(const Poset& p, const Bits& keep,
               std::vector<int>* index_map = nullptr);

// Breadth -----------------------------------------------------------------

struct CountResult {
  int value = 0;
  bool exact = true;  // if false, `value` is a certified lower bound
  SearchStats stats;
};

// Self-dual tuple breadth: least b such that x_i <= y_j for all i != j
// (0 <= i,j <= b) forces x_i <= y_i for some i. Exhaustive counterexample
// search with pruning, iterating b upward. The 1-element poset reports 1.
CountResult breadth(const Poset& p, Budget budget = {});

// Join-semilattice breadth: least b such that every (b+1)-element subset's
// join equals the join of some nonempty b-element subset. Computed as the
// maximum size of an irredundant set of join-irreducibles. Throws
// NotJoinSemilattice when some pair has no join.
CountResult breadth_join(const Poset& p, Budget budget = {});

// Products and embeddings ---------------------------------------------------

// Direct product ordered componentwise; labels record the pair.
Poset product(const Poset& a, const Poset& b, int cap = Poset::kDefaultCapacity);

struct EmbedResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<int> map;  // P-index -> Q-index when Found
  SearchStats stats;
};

// Order-embedding search (injective, preserves and reflects <=). A found map
// is re-verified before it is returned.
EmbedResult embeds(const Poset& p, const Poset& q, Budget budget = {});

// Verifies f (P-index -> Q-index) is an order-embedding.
bool is_embedding(const Poset& p, const Poset& q, const std::vector<int>& f);

}  // namespace posetlab

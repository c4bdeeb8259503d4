#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "posetlab/budget.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// A set mapping of order r on ground set {0..n-1} (n <= 64): a table from
// subsets X with |X| <= r to subsets F(X). Missing keys (including the empty
// set by default) evaluate to the empty set.
class SetMapping {
 public:
  SetMapping() = default;
  SetMapping(int ground, int order);

  int ground() const { return ground_; }
  int order() const { return order_; }
  std::uint64_t ground_mask() const;

  // F(X) for |X| <= r; keys of larger size are rejected.
  std::uint64_t value(std::uint64_t key) const;
  void set(std::uint64_t key, std::uint64_t val);

  // Isotone totalization F_hat(X) = union of F(Y) over table keys Y subseteq X;
  // defined for arguments of any size.
  std::uint64_t hull(std::uint64_t x) const;

  // Stored (key, value) entries with nonempty value, sorted by (size, value).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries() const;

  bool operator==(const SetMapping& o) const;

 private:
  int ground_ = 0;
  int order_ = 0;
  std::map<std::uint64_t, std::uint64_t> table_;
};

// H is free for F: F(X) /\ H subseteq X for every X subseteq H with |X| <= r.
bool is_free(const SetMapping& f, std::uint64_t h);

// Same with only the |X| == r arguments (the order-r restriction).
bool is_free_order_r(const SetMapping& f, std::uint64_t h);

struct FindFreeResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::uint64_t witness = 0;  // free set of the requested size when Found
  SearchStats stats;
};

// Backtracking search for a free set of size m; witnesses are re-verified.
FindFreeResult find_free(const SetMapping& f, int m, Budget budget = {});

// F'(X) = union of F(Y) over Y subseteq X, for keys |X| <= r.
SetMapping isotone_closure(const SetMapping& f);

// For isotone F and |H| > r, freeness for the order-r restriction is
// equivalent to freeness for all arguments of size <= r; this report verifies
// both routes (direct check vs derivation along intersection decompositions).
struct ReductionReport {
  bool free_all = false;
  bool free_order_r = false;
  bool decomposition_ok = false;  // every small argument derived from r-sets
  bool consistent() const { return free_all == free_order_r; }
};

ReductionReport check_free_reduction(const SetMapping& f, std::uint64_t h);

struct FreeEmbedding {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<int> map;  // poset element -> ground element when Found
  SearchStats stats;
};

// Finite shadow of P leadsto: injective f with
//   F_hat(f[P down x]) /\ f[P down y] subseteq f[P down x]  for all x <= y.
// F is evaluated through its isotone totalization. Witnesses re-verified.
FreeEmbedding leadsto_shadow(const Poset& p, const SetMapping& f,
                             Budget budget = {});

// Variant over join-irreducibles: injective g on J(P) with the same condition
// applied to images of J_P(x). Reports both searches side by side; no
// equivalence between them is asserted.
struct JiShadowReport {
  FreeEmbedding full;
  FreeEmbedding ji;
};

JiShadowReport ji_shadow_check(const Poset& p, const SetMapping& f,
                               Budget budget = {});

// Six distinct elements xi_0..2, eta_0..2 realizing the order-2 configuration:
//   xi_i  not in F({xi_j, eta_j})          for all i != j
//   eta_i not in F({xi_j, eta_j})          for all i != j
//   eta_i not in F({xi_0, xi_1, xi_2})     for all i
// Membership is evaluated through the isotone totalization, so a Q witness is
// always a P witness.
struct ConfigResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::array<int, 3> xi{};
  std::array<int, 3> eta{};
  SearchStats stats;
};

ConfigResult config_search_p(const SetMapping& f, Budget budget = {});

// The stronger configuration:
//   xi_i  not in F({xi_j, eta_j})                     for all i != j
//   eta_i not in F({xi_0, xi_1, xi_2, eta_j})         for all i != j
ConfigResult config_search_q(const SetMapping& f, Budget budget = {});

// Adversarial generators --------------------------------------------------

// F(X) = { (x + shift) mod n : x in X } \ X.
SetMapping cyclic_shift_mapping(int ground, int order, int shift = 1);
// F(X) = { smallest element of the ground set not in X }.
SetMapping block_smallest_mapping(int ground, int order);
// Each ground element lands in F(X) independently with probability `density`.
SetMapping random_mapping(int ground, int order, double density,
                          std::uint64_t seed);

}  // namespace posetlab

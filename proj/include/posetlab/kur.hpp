#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posetlab/bigint.hpp"
#include "posetlab/budget.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// Certified interval for the Kuratowski index, with the rules that produced
// each end. Rule tags: "antichain", "comparable-pair", "tree",
// "downset-breadth", "dimension", "dimension-upper", "width-irreducibles",
// "irreducible-count", "product-sum", "hajnal-exact", "pinch-exact",
// "cube-breadth", "gch".
struct BoundInterval {
  int lo = 0;
  int hi = 0;
  std::vector<std::string> lo_rules;
  std::vector<std::string> hi_rules;
  bool hi_conditional = false;  // upper end relies on a conditional axiom (gch)
};

struct KurOptions {
  // Optional user-supplied direct-product factorization of P (verified by an
  // explicit isomorphism search before it is used).
  std::vector<Poset> factors;
  // Apply the conditional r+1 upper bound for UpTo cubes; results are marked.
  bool assume_gch = false;
};

BoundInterval kur_bounds(const Poset& p, Budget budget = {},
                         const KurOptions& opts = {});

struct UpperBound {
  int value = 0;
  std::vector<std::string> rules;
};

// kur(P x Q) <= kur(P) + kur(Q): sum of the factor upper bounds.
UpperBound kur_product_upper(const BoundInterval& a, const BoundInterval& b);

// A free-set relation "(aleph_offset, order, aleph_0) -> size".
struct AlephRelation {
  std::uint64_t offset = 0;
  int order = 1;
  Card size;
  bool conditional = false;  // depends on a conditional axiom (gch)
  std::string rule;          // which estimate/bound produced it

  std::string render_aleph() const;
  std::string render_lambda() const;
};

// From kur B_m(<=r) <= kur_hi: free sets of size m at offset kur_hi - 1.
AlephRelation relation_from_cube(std::uint64_t m, int order, int kur_hi,
                                 bool conditional = false,
                                 std::string rule = {});

}  // namespace posetlab

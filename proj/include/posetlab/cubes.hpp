#pragma once

#include <cstdint>
#include <vector>

#include "posetlab/dimension.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// Specification of a truncated cube over the ground set {0..m-1}.
//   UpTo(r):    all X with |X| <= r, plus the full set.   (1 <= r < m)
//   Levels(rs): all X with |X| in rs.                     (1 <= r_0 < ... <= m)
struct CubeSpec {
  enum class Kind { UpTo, Levels };

  Kind kind = Kind::UpTo;
  int m = 0;
  int r = 0;                // UpTo only, normalized to min(r, m-1)
  std::vector<int> levels;  // Levels only, strictly increasing

  // Validates and normalizes (UpTo r is clamped to m-1; r >= 1, m >= 2).
  static CubeSpec up_to(int m, int r);
  static CubeSpec at_levels(int m, std::vector<int> levels);

  int element_count() const;
};

// Canonical element list: subset bit-masks sorted by (size, integer value).
std::vector<std::uint64_t> cube_elements(const CubeSpec& spec);

// Index of a subset mask within the canonical list, or -1.
int cube_index(const CubeSpec& spec, std::uint64_t mask);

// Builds the cube poset (inclusion order) with subset labels "{0,2}".
// UpTo cubes carry a CubeTag so downstream rules can recognize them.
Poset build_cube(const CubeSpec& spec, int cap = Poset::kDefaultCapacity);

// Boolean lattice on k atoms (equals B_k(<=k-1) for k >= 2, tagged as such).
Poset powerset(int k, int cap = Poset::kDefaultCapacity);

// Product of chains with the given lengths (tuples ordered componentwise);
// the natural target for realizer-induced embeddings.
Poset chain_product(const std::vector<int>& lengths, int cap);

// The embedding P -> chain_product(|P|, ..., |P|) induced by a realizer:
// x maps to its position tuple. Verified before returning.
std::vector<int> realizer_embedding(const Poset& p, const Realizer& r,
                                    const Poset& chain_prod);

// Extends an embedding phi of B_m(1,r) into a lattice K to an embedding of
// B_m(<=r) via psi(X) = join of phi({i}) for i in X (empty set -> least of K).
// Throws PhiNotEmbedding / PsiNotEmbedding / NotALattice.
std::vector<int> psi_extend(int m, int r, const Poset& k,
                            const std::vector<int>& phi);

// Writes X = intersection of r-sized sets X_i with X subseteq X_i subseteq H,
// one X_i per element of H \ X (requires |X| <= r < |H|). Masks over a ground
// set of at most 64 elements.
std::vector<std::uint64_t> intersection_decomposition(std::uint64_t x_mask,
                                                      std::uint64_t h_mask,
                                                      int r);

// dim B_m(<=r) == dim B_m(1,r), checked by two independent exact computations
// plus the constructive psi pipeline (realizer -> chain product -> phi -> psi).
struct TransferReport {
  int dim_levels = 0;
  int dim_upto = 0;
  bool both_exact = false;
  bool equal = false;
  bool psi_verified = false;
  int chain_product_size = 0;
  SearchStats stats;
};

TransferReport check_dim_transfer(int m, int r, Budget budget = {});

}  // namespace posetlab

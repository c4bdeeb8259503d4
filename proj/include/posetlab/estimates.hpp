#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetlab/bigint.hpp"
#include "posetlab/budget.hpp"
#include "posetlab/kur.hpp"

namespace posetlab {

// floor( (1/2) * (1 - 2^-r)^(-n/r) ) for 1 <= r < n, decided purely in
// integers: the largest t with (2t)^r * (2^r - 1)^n <= 2^{rn}.
BigInt spencer_exponent(std::uint64_t n, unsigned r);

// E(n, r) = 2^spencer_exponent(n, r), kept symbolic.
PowerOfTwo e_value(std::uint64_t n, unsigned r);

// Free sets of size E(n,r) at offset n-1 (requires 2 <= r < n).
AlephRelation spencer_relation(std::uint64_t n, unsigned r);

// Least n with E(n, r) >= m, by exact evaluation (monotone in n).
std::uint64_t spencer_min_n(std::uint64_t m, unsigned r);

struct ETableRow {
  std::uint64_t n;  // minimal n attaining this E value
  PowerOfTwo e;
};

// For each E value attained up to n_max, the minimal n attaining it; rows are
// kept only when E > n (a free set strictly larger than the irreducible-count
// fallback gives at the same offset).
std::vector<ETableRow> table_e(unsigned r, std::uint64_t n_max);

struct AsymptoticRow {
  std::uint64_t n;
  double lg_lg_e;    // log2 of the exact exponent
  double estimate;   // n / (r * 2^r * ln 2)
  double ratio;      // lg_lg_e / estimate
};

// Floating arithmetic is allowed here (report path, not a certified bound).
std::vector<AsymptoticRow> asymptotic_check(unsigned r,
                                            const std::vector<std::uint64_t>& ns);

// Least d with m * C(m-1, r) * r^d < (r+1)^d, exact (1 <= r < m).
std::uint64_t furedi_kahn_min_d(std::uint64_t m, unsigned r);

// dim B_m(1, k-1) = m - j + 1 when some j in [2, floor(sqrt(m))] satisfies
// floor((m + j^2 - j)/j) <= k < floor((m + (j-1)^2 - (j-1))/(j-1)); None when
// no window matches. All admissible j are scanned and uniqueness is asserted.
std::optional<std::uint64_t> dushnik_dim(std::uint64_t m, std::uint64_t k);

// Best certified relation "(aleph_{hi-1}, r, aleph_0) -> m": minimum over
// exact dimension (small cubes), Dushnik, Furedi-Kahn, Spencer and the
// irreducible-count fallback. Ties prefer the more exact rule.
AlephRelation best_relation(std::uint64_t m, unsigned r, Budget budget = {});

}  // namespace posetlab

#include "posetlab/estimates.hpp"

#include <cmath>
#include <limits>

#include "posetlab/cubes.hpp"
#include "posetlab/dimension.hpp"

namespace posetlab {

namespace {

BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  if (exp > std::numeric_limits<unsigned>::max())
    throw InvalidArgs("exponent out of supported range");
  return boost::multiprecision::pow(base, unsigned(exp));
}

// floor( 2^{r(n-1)} / (2^r - 1)^n ), the quantity whose r-th integer root is
// the exponent: t is the largest integer with t^r * (2^r-1)^n <= 2^{r(n-1)}.
BigInt spencer_quotient(std::uint64_t n, unsigned r) {
  BigInt denom = pow_big((BigInt(1) << r) - 1, n);
  BigInt num = BigInt(1) << unsigned(r * (n - 1));
  return num / denom;
}

}  // namespace

BigInt spencer_exponent(std::uint64_t n, unsigned r) {
  if (r < 1 || n <= r) throw InvalidArgs("spencer exponent requires 1 <= r < n");
  if (n > (1ull << 32)) throw InvalidArgs("n out of supported range");
  return iroot(spencer_quotient(n, r), r);
}

PowerOfTwo e_value(std::uint64_t n, unsigned r) {
  return PowerOfTwo{spencer_exponent(n, r)};
}

AlephRelation spencer_relation(std::uint64_t n, unsigned r) {
  if (r < 2 || n <= r) throw InvalidArgs("spencer relation requires 2 <= r < n");
  AlephRelation rel;
  rel.offset = n - 1;
  rel.order = int(r);
  rel.size = Card::power_of_two(spencer_exponent(n, r));
  rel.rule = "spencer";
  return rel;
}

std::uint64_t spencer_min_n(std::uint64_t m, unsigned r) {
  if (r < 2) throw InvalidArgs("spencer_min_n requires r >= 2");
  if (m < 1) throw InvalidArgs("spencer_min_n requires m >= 1");
  const BigInt target(m);
  auto ok = [&](std::uint64_t n) { return e_value(n, r).at_least(target); };
  std::uint64_t lo = r + 1;
  if (ok(lo)) return lo;
  std::uint64_t hi = lo;
  while (!ok(hi)) {
    lo = hi + 1;
    hi *= 2;
    if (hi > (1ull << 22))
      throw InvalidArgs("spencer_min_n out of supported range");
  }
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::vector<ETableRow> table_e(unsigned r, std::uint64_t n_max) {
  if (r < 2) throw InvalidArgs("table requires r >= 2");
  if (n_max > (1ull << 22)) throw InvalidArgs("n_max out of supported range");
  std::vector<ETableRow> rows;
  if (n_max <= r) return rows;
  const BigInt base = (BigInt(1) << r) - 1;
  BigInt denom = pow_big(base, r + 1);
  BigInt num = BigInt(1) << unsigned(r * r);  // 2^{r(n-1)} at n = r+1
  BigInt last = -1;
  for (std::uint64_t n = r + 1; n <= n_max; ++n) {
    BigInt t = iroot(num / denom, r);
    if (t > last) {
      last = t;
      PowerOfTwo e{t};
      // Keep only rows whose free set beats its own offset count.
      if (e.at_least(BigInt(n) + 1)) rows.push_back({n, e});
    }
    num <<= r;
    denom *= base;
  }
  return rows;
}

std::vector<AsymptoticRow> asymptotic_check(
    unsigned r, const std::vector<std::uint64_t>& ns) {
  if (r < 2 || r > 64) throw InvalidArgs("asymptotic check requires 2 <= r <= 64");
  std::vector<AsymptoticRow> rows;
  for (std::uint64_t n : ns) {
    if (n <= r) throw InvalidArgs("asymptotic check requires n > r");
    BigInt t = spencer_exponent(n, r);
    if (t < 2) throw InvalidArgs("n too small for an asymptotic row");
    AsymptoticRow row;
    row.n = n;
    row.lg_lg_e = log2_big(t);
    row.estimate = double(n) / (double(r) * std::ldexp(1.0, int(r)) * std::log(2.0));
    row.ratio = row.lg_lg_e / row.estimate;
    rows.push_back(row);
  }
  return rows;
}

std::uint64_t furedi_kahn_min_d(std::uint64_t m, unsigned r) {
  if (r < 1 || m <= r) throw InvalidArgs("furedi-kahn requires 1 <= r < m");
  BigInt c = 1;  // C(m-1, r)
  for (unsigned i = 1; i <= r; ++i) c = c * BigInt(m - 1 - r + i) / i;
  const BigInt target = BigInt(m) * c;
  const BigInt num(r + 1), den(r);
  // least d with target * r^d < (r+1)^d
  auto ok = [&](std::uint64_t d) {
    return target * pow_big(den, d) < pow_big(num, d);
  };
  std::uint64_t hi = 1;
  while (!ok(hi)) {
    hi *= 2;
    if (hi > (1ull << 26)) throw InvalidArgs("furedi-kahn out of supported range");
  }
  std::uint64_t lo = hi == 1 ? 1 : hi / 2 + 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::optional<std::uint64_t> dushnik_dim(std::uint64_t m, std::uint64_t k) {
  if (m < 4 || m > (1ull << 40) || k < 1) return std::nullopt;
  std::optional<std::uint64_t> result;
  for (std::uint64_t j = 2; j * j <= m; ++j) {
    std::uint64_t lo = (m + j * j - j) / j;
    std::uint64_t hi = (m + (j - 1) * (j - 1) - j + 1) / (j - 1);
    if (lo <= k && k < hi) {
      if (result) throw InternalError("dushnik windows must be disjoint");
      result = m - j + 1;
    }
  }
  return result;
}

AlephRelation best_relation(std::uint64_t m, unsigned r, Budget budget) {
  if (m < 2 || r < 1) throw InvalidArgs("relation requires m >= 2 and r >= 1");
  std::uint64_t best = m;  // m join-irreducibles always certify the index
  std::string rule = "irreducible-count";
  auto consider = [&](std::uint64_t value, const std::string& tag) {
    if (value < best) {
      best = value;
      rule = tag;
    }
  };

  // Exact cube dimension (small instances only).
  if (m <= 64 && r < m) {
    CubeSpec spec = r == 1 ? CubeSpec::up_to(int(m), 1)
                           : CubeSpec::at_levels(int(m), {1, int(r)});
    if (spec.element_count() <= 48) {
      DimResult d = dim_exact(build_cube(spec), budget);
      if (d.exact()) consider(std::uint64_t(d.value()), "dimension");
    }
  }

  if (auto v = dushnik_dim(m, r + 1)) consider(*v, "dushnik");

  if (r < m) consider(furedi_kahn_min_d(m, r), "furedi-kahn");

  if (r >= 2 && r <= 62) {
    // Rough sizing first: the exact search is exponential-cost in n.
    std::uint64_t need_t = 1;
    while ((std::uint64_t(1) << need_t) < m && need_t < 63) ++need_t;
    double ln_gain = -std::log1p(-std::ldexp(1.0, -int(r)));
    double n_est = double(r) * std::log(2.0 * double(need_t)) / ln_gain;
    if (n_est <= 200000.0) consider(spencer_min_n(m, r), "spencer");
  }

  AlephRelation rel;
  rel.offset = best - 1;
  rel.order = int(r);
  rel.size = Card::plain(BigInt(m));
  rel.rule = rule;
  return rel;
}

}  // namespace posetlab

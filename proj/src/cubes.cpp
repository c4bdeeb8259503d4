#include "posetlab/cubes.hpp"

#include <algorithm>
#include <climits>

#include "posetlab/io.hpp"

namespace posetlab {

namespace {

void check_ground(int m) {
  if (m < 1 || m > 64)
    throw InvalidSpec("cube ground set must have 1..64 elements");
}

// C(m, k) guarded against overflow of the running product.
unsigned long long binom(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) {
    unsigned __int128 t = (unsigned __int128)c * (m - k + i) / i;
    if (t > ULLONG_MAX) throw CapacityExceeded("binomial overflow");
    c = (unsigned long long)t;
  }
  return c;
}

std::vector<int> size_list(const CubeSpec& spec) {
  if (spec.kind == CubeSpec::Kind::UpTo) {
    std::vector<int> sizes;
    for (int k = 0; k <= spec.r; ++k) sizes.push_back(k);
    sizes.push_back(spec.m);  // the full set completes the truncated cube
    return sizes;
  }
  return spec.levels;
}

}  // namespace

CubeSpec CubeSpec::up_to(int m, int r) {
  check_ground(m);
  if (m < 2) throw InvalidSpec("up-to cube requires m >= 2");
  if (r < 1) throw InvalidSpec("up-to cube requires r >= 1");
  CubeSpec s;
  s.kind = Kind::UpTo;
  s.m = m;
  s.r = std::min(r, m - 1);
  return s;
}

CubeSpec CubeSpec::at_levels(int m, std::vector<int> levels) {
  check_ground(m);
  if (levels.empty()) throw InvalidSpec("levels cube requires at least one level");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 1 || levels[i] > m)
      throw InvalidSpec("cube levels must lie in [1, m]");
    if (i && levels[i] <= levels[i - 1])
      throw InvalidSpec("cube levels must be strictly increasing");
  }
  CubeSpec s;
  s.kind = Kind::Levels;
  s.m = m;
  s.levels = std::move(levels);
  return s;
}

int CubeSpec::element_count() const {
  unsigned __int128 total = 0;
  for (int k : size_list(*this)) total += binom(m, k);
  if (total > INT_MAX) throw CapacityExceeded("cube has too many elements");
  return int(total);
}

std::vector<std::uint64_t> cube_elements(const CubeSpec& spec) {
  int count = spec.element_count();
  if (count > Poset::kHardCapacity)
    throw CapacityExceeded("cube has " + std::to_string(count) +
                           " elements, beyond the hard capacity");
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (int k : size_list(spec)) {
    if (k == 0) {
      out.push_back(0);
      continue;
    }
    std::uint64_t v = (k == 64) ? ~0ull : (1ull << k) - 1;
    unsigned long long c = binom(spec.m, k);
    for (unsigned long long i = 0; i < c; ++i) {
      out.push_back(v);
      if (i + 1 == c) break;
      // Gosper's hack: next mask of equal popcount in increasing value order.
      std::uint64_t u = v & (~v + 1);
      std::uint64_t w = v + u;
      v = w | (((v ^ w) >> 2) / u);
    }
  }
  return out;
}

int cube_index(const CubeSpec& spec, std::uint64_t mask) {
  auto elems = cube_elements(spec);
  auto it = std::find(elems.begin(), elems.end(), mask);
  return it == elems.end() ? -1 : int(it - elems.begin());
}

Poset build_cube(const CubeSpec& spec, int cap) {
  auto elems = cube_elements(spec);
  const int n = int(elems.size());
  if (n > cap || n > Poset::kHardCapacity)
    throw CapacityExceeded("cube with " + std::to_string(n) +
                           " elements exceeds capacity " + std::to_string(cap));
  std::vector<Bits> up(n, Bits(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = subset_label(elems[i]);
    for (int j = 0; j < n; ++j)
      if ((elems[i] & ~elems[j]) == 0) up[i].set(j);
  }
  Poset p = Poset::from_rows(std::move(up), std::move(labels));
  if (spec.kind == CubeSpec::Kind::UpTo)
    p.set_cube_tag({spec.m, spec.r});
  return p;
}

Poset powerset(int k, int cap) {
  if (k < 0 || k > 64) throw InvalidSpec("powerset requires 0 <= k <= 64");
  if (k >= 2) return build_cube(CubeSpec::up_to(k, k - 1), cap);
  if (k == 1) return poset_from_covers(2, {{0, 1}}, {"{}", "{0}"}, cap);
  return poset_from_covers(1, {}, {"{}"}, cap);
}

Poset chain_product(const std::vector<int>& lengths, int cap) {
  unsigned __int128 total = 1;
  for (int l : lengths) {
    if (l < 1) throw InvalidSpec("chain lengths must be positive");
    total *= l;
    if (total > Poset::kHardCapacity)
      throw CapacityExceeded("chain product exceeds the hard capacity");
  }
  const int n = int(total);
  if (n > cap)
    throw CapacityExceeded("chain product with " + std::to_string(n) +
                           " elements exceeds capacity " + std::to_string(cap));
  const int k = int(lengths.size());
  std::vector<std::vector<int>> digits(n, std::vector<int>(k, 0));
  for (int i = 0; i < n; ++i) {
    int rest = i;
    for (int d = k - 1; d >= 0; --d) {
      digits[i][d] = rest % lengths[d];
      rest /= lengths[d];
    }
  }
  std::vector<Bits> up(n, Bits(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string lab = "(";
    for (int d = 0; d < k; ++d)
      lab += (d ? "," : "") + std::to_string(digits[i][d]);
    labels[i] = lab + ")";
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int d = 0; d < k && le; ++d)
        if (digits[i][d] > digits[j][d]) le = false;
      if (le) up[i].set(j);
    }
  }
  return Poset::from_rows(std::move(up), std::move(labels));
}

std::vector<int> realizer_embedding(const Poset& p, const Realizer& r,
                                    const Poset& chain_prod) {
  if (!is_realizer(p, r))
    throw InvalidArgs("realizer_embedding requires a verified realizer");
  const int n = p.size();
  const int t = int(r.size());
  unsigned __int128 expect = 1;
  for (int i = 0; i < t; ++i) expect *= n;
  if (expect != (unsigned __int128)chain_prod.size())
    throw InvalidArgs("chain product size must be |P|^t for a t-realizer");
  std::vector<int> f(n, 0);
  for (const auto& ext : r) {
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[ext[k]] = k;
    for (int x = 0; x < n; ++x) f[x] = f[x] * n + pos[x];
  }
  if (!is_embedding(p, chain_prod, f))
    throw InternalError("realizer-induced map failed embedding verification");
  return f;
}

std::vector<int> psi_extend(int m, int r, const Poset& k,
                            const std::vector<int>& phi) {
  if (r < 1 || r >= m) throw InvalidSpec("psi_extend requires 1 <= r < m");
  std::vector<int> lv = r == 1 ? std::vector<int>{1} : std::vector<int>{1, r};
  CubeSpec lspec = CubeSpec::at_levels(m, lv);
  Poset lev = build_cube(lspec, Poset::kHardCapacity);

  if (!k.least() || !is_join_semilattice(k))
    throw NotALattice("psi_extend requires the target to be a lattice");
  if (int(phi.size()) != lev.size() || !is_embedding(lev, k, phi))
    throw PhiNotEmbedding("phi is not an order-embedding of the level cube");

  auto lev_elems = cube_elements(lspec);
  std::vector<int> singleton_image(m, -1);
  for (int i = 0; i < int(lev_elems.size()); ++i) {
    std::uint64_t e = lev_elems[i];
    if (__builtin_popcountll(e) == 1)
      singleton_image[__builtin_ctzll(e)] = phi[i];
  }

  CubeSpec uspec = CubeSpec::up_to(m, r);
  Poset up_cube = build_cube(uspec, Poset::kHardCapacity);
  auto up_elems = cube_elements(uspec);
  std::vector<int> psi(up_elems.size(), *k.least());
  for (std::size_t i = 0; i < up_elems.size(); ++i) {
    std::uint64_t x = up_elems[i];
    int cur = -1;
    for (int b = 0; b < m; ++b) {
      if (!((x >> b) & 1)) continue;
      int img = singleton_image[b];
      cur = cur == -1 ? img : lub_pair(k, cur, img).value();
    }
    if (cur != -1) psi[i] = cur;
  }
  if (!is_embedding(up_cube, k, psi))
    throw PsiNotEmbedding("join extension failed embedding verification");
  return psi;
}

std::vector<std::uint64_t> intersection_decomposition(std::uint64_t x_mask,
                                                      std::uint64_t h_mask,
                                                      int r) {
  if ((x_mask & ~h_mask) != 0)
    throw InvalidArgs("X must be a subset of H");
  const int xs = __builtin_popcountll(x_mask);
  const int hs = __builtin_popcountll(h_mask);
  if (r < 1 || xs > r || r >= hs)
    throw InvalidArgs("decomposition requires |X| <= r < |H|");
  std::vector<std::uint64_t> out;
  std::uint64_t outside = h_mask & ~x_mask;
  for (std::uint64_t rest = outside; rest; rest &= rest - 1) {
    std::uint64_t xi = rest & (~rest + 1);
    std::uint64_t y = x_mask;
    std::uint64_t pool = outside & ~xi;
    while (__builtin_popcountll(y) < r) {
      std::uint64_t pick = pool & (~pool + 1);
      y |= pick;
      pool &= ~pick;
    }
    out.push_back(y);
  }
  std::uint64_t meet = h_mask;
  for (auto y : out) meet &= y;
  if (meet != x_mask)
    throw InternalError("decomposition does not intersect back to X");
  return out;
}

TransferReport check_dim_transfer(int m, int r, Budget budget) {
  if (r < 1 || r >= m) throw InvalidSpec("check_dim_transfer requires 1 <= r < m");
  TransferReport rep;
  std::vector<int> lv = r == 1 ? std::vector<int>{1} : std::vector<int>{1, r};
  Poset lev = build_cube(CubeSpec::at_levels(m, lv), Poset::kHardCapacity);
  Poset upc = build_cube(CubeSpec::up_to(m, r), Poset::kHardCapacity);

  DimResult dl = dim_exact(lev, budget);
  DimResult du = dim_exact(upc, budget);
  rep.dim_levels = dl.upper;
  rep.dim_upto = du.upper;
  rep.both_exact = dl.exact() && du.exact();
  rep.equal = rep.both_exact && dl.value() == du.value();

  // Constructive transfer: realizer -> chain product -> phi -> psi.
  std::vector<int> lengths(dl.witness.size(), lev.size());
  Poset chains = chain_product(lengths, Poset::kHardCapacity);
  rep.chain_product_size = chains.size();
  std::vector<int> phi = realizer_embedding(lev, dl.witness, chains);
  psi_extend(m, r, chains, phi);  // throws unless the extension verifies
  rep.psi_verified = true;

  rep.stats.nodes = dl.stats.nodes + du.stats.nodes;
  rep.stats.ms = dl.stats.ms + du.stats.ms;
  rep.stats.budget_exhausted =
      dl.stats.budget_exhausted || du.stats.budget_exhausted;
  return rep;
}

}  // namespace posetlab

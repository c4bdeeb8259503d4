#include <cstdint>
#include <vector>

#include "doctest.h"
#include "posetlab/errors.hpp"
#include "posetlab/freeset.hpp"
#include "posetlab/poset.hpp"

using namespace posetlab;

namespace {

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// Direct restatement of the definition, independent of the search code.
bool oracle_free(const SetMapping& f, std::uint64_t h) {
  std::uint64_t sub = h;
  while (true) {
    if (popcount(sub) <= f.order() && (f.value(sub) & h & ~sub)) return false;
    if (sub == 0) break;
    sub = (sub - 1) & h;
  }
  return true;
}

std::uint64_t hull_oracle(const SetMapping& f, std::uint64_t x) {
  std::uint64_t out = 0;
  for (const auto& [key, val] : f.entries())
    if ((key & ~x) == 0) out |= val;
  return out;
}

bool exists_free_of_size(const SetMapping& f, int m) {
  const int n = f.ground();
  if (m > n) return false;
  const std::uint64_t top = 1ull << n;
  for (std::uint64_t h = 0; h < top; ++h)
    if (popcount(h) == m && oracle_free(f, h)) return true;
  return false;
}

bool config_ok_p(const SetMapping& f, const std::array<int, 3>& xi,
                 const std::array<int, 3>& eta) {
  std::uint64_t big = 0;
  for (int i = 0; i < 3; ++i) big |= 1ull << xi[i];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::uint64_t pair = (1ull << xi[j]) | (1ull << eta[j]);
      if (f.hull(pair) & (1ull << xi[i])) return false;
      if (f.hull(pair) & (1ull << eta[i])) return false;
    }
  for (int i = 0; i < 3; ++i)
    if (f.hull(big) & (1ull << eta[i])) return false;
  return true;
}

bool all_distinct(const std::array<int, 3>& xi, const std::array<int, 3>& eta) {
  std::uint64_t seen = 0;
  for (int v : xi) seen |= 1ull << v;
  for (int v : eta) seen |= 1ull << v;
  return popcount(seen) == 6;
}

}  // namespace

TEST_CASE("set mapping validation and storage") {
  CHECK_THROWS_AS(SetMapping(0, 1), InvalidSpec);
  CHECK_THROWS_AS(SetMapping(65, 1), InvalidSpec);
  CHECK_THROWS_AS(SetMapping(4, 0), InvalidSpec);
  CHECK_THROWS_AS(SetMapping(4, 5), InvalidSpec);

  SetMapping f(4, 2);
  CHECK(f.ground_mask() == 0b1111);
  CHECK_THROWS_AS(f.set(0b10000, 0b1), InvalidArgs);   // key outside ground
  CHECK_THROWS_AS(f.set(0b0111, 0b1), InvalidArgs);    // key too large
  CHECK_THROWS_AS(f.set(0b1, 0b10000), InvalidArgs);   // value outside ground
  CHECK_THROWS_AS(f.value(0b0111), InvalidArgs);
  CHECK(f.value(0b1) == 0);  // missing key

  f.set(0b0011, 0b0100);
  f.set(0b0001, 0b0010);
  f.set(0b0100, 0b0001);
  f.set(0b0010, 0b0100);
  auto e = f.entries();
  REQUIRE(e.size() == 4);
  CHECK(e[0].first == 0b0001);
  CHECK(e[1].first == 0b0010);
  CHECK(e[2].first == 0b0100);
  CHECK(e[3].first == 0b0011);

  f.set(0b0010, 0);  // erases
  CHECK(f.entries().size() == 3);
  CHECK(f.value(0b0010) == 0);

  CHECK(f.hull(0b0011) == (0b0100 | 0b0010));
  CHECK(f.hull(0b1011) == (0b0100 | 0b0010));
  CHECK(f.hull(0b0100) == 0b0001);
  CHECK(f.hull(0) == 0);
  for (std::uint64_t x = 0; x < 16; ++x) CHECK(f.hull(x) == hull_oracle(f, x));
}

TEST_CASE("freeness agrees with the defining enumeration") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    SetMapping f = random_mapping(7, 2, 0.25, seed);
    for (std::uint64_t h = 0; h < (1ull << 7); h += 3) {
      CHECK(is_free(f, h) == oracle_free(f, h));
      if (is_free(f, h)) CHECK(is_free_order_r(f, h));
    }
  }
}

TEST_CASE("find_free matches exhaustive enumeration") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    int n = 4 + int(seed % 5);
    int r = 1 + int(seed % 2);
    SetMapping f = random_mapping(n, r, 0.10 + 0.08 * double(seed % 6), seed);
    for (int m = 1; m <= 4; ++m) {
      FindFreeResult res = find_free(f, m);
      CHECK((res.status == SearchStatus::Found) == exists_free_of_size(f, m));
      if (res.status == SearchStatus::Found) {
        CHECK(popcount(res.witness) == m);
        CHECK(oracle_free(f, res.witness));
      }
    }
  }
  SetMapping any = random_mapping(5, 2, 0.5, 9);
  CHECK(find_free(any, 0).status == SearchStatus::Found);
  CHECK(find_free(any, 6).status == SearchStatus::Exhausted);
}

TEST_CASE("one cyclic shift on three points kills pairs") {
  SetMapping f = cyclic_shift_mapping(3, 1, 1);
  CHECK(f.value(0b001) == 0b010);
  CHECK(f.value(0b010) == 0b100);
  CHECK(f.value(0b100) == 0b001);
  CHECK(find_free(f, 1).status == SearchStatus::Found);
  CHECK(find_free(f, 2).status == SearchStatus::Exhausted);
  for (std::uint64_t h = 0; h < 8; ++h)
    CHECK(is_free(f, h) == (popcount(h) <= 1));
}

TEST_CASE("block mapping frees exactly the zero-avoiding sets") {
  SetMapping f = block_smallest_mapping(8, 2);
  CHECK(f.value(0b0110) == 0b0001);
  CHECK(f.value(0b0011) == 0b0100);
  FindFreeResult big = find_free(f, 7);
  REQUIRE(big.status == SearchStatus::Found);
  CHECK(big.witness == 0b11111110);
  CHECK(find_free(f, 8).status == SearchStatus::Exhausted);
}

TEST_CASE("budgeted search reports partial status") {
  SetMapping f = cyclic_shift_mapping(12, 2, 1);
  FindFreeResult res = find_free(f, 6, Budget{2, 0});
  CHECK(res.status == SearchStatus::Budget);
  CHECK(res.stats.budget_exhausted);
  CHECK(find_free(f, 6).status == SearchStatus::Found);
}

TEST_CASE("isotone closure") {
  for (std::uint64_t seed = 3; seed <= 10; ++seed) {
    SetMapping f = random_mapping(6, 2, 0.3, seed);
    SetMapping g = isotone_closure(f);
    for (const auto& [key, val] : f.entries()) {
      CHECK((val & ~g.value(key)) == 0);      // pointwise gain only
      CHECK(g.value(key) == f.hull(key));     // closure value is the hull
    }
    for (std::uint64_t x = 0; x < 64; ++x) CHECK(g.hull(x) == f.hull(x));
    CHECK(isotone_closure(g) == g);
  }
}

TEST_CASE("order-r reduction holds for isotone mappings") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 5 + int(seed % 4);
    int r = 1 + int(seed % 3);
    SetMapping g = isotone_closure(random_mapping(n, r, 0.2, seed));
    std::vector<std::uint64_t> hs = {0b1011, 0b11101, (1ull << n) - 1};
    for (std::uint64_t h : hs) {
      if (popcount(h) <= r) continue;
      ReductionReport rep = check_free_reduction(g, h);
      CHECK(rep.consistent());
      CHECK(rep.decomposition_ok);
      CHECK(rep.free_all == oracle_free(g, h));
      ++checked;
    }
  }
  CHECK(checked >= 80);
}

TEST_CASE("the reduction needs isotonicity") {
  SetMapping f(3, 2);  // F({0}) = {1}, everything else empty: not isotone
  f.set(0b001, 0b010);
  ReductionReport rep = check_free_reduction(f, 0b111);
  CHECK(rep.free_order_r);       // both 2-element arguments map to nothing
  CHECK(!rep.free_all);          // the singleton argument catches 1
  CHECK(!rep.consistent());
  CHECK(!rep.decomposition_ok);
  CHECK_THROWS_AS(check_free_reduction(f, 0b011), InvalidArgs);  // |H| <= r
}

TEST_CASE("shadow embedding of small posets") {
  SetMapping empty(5, 2);
  FreeEmbedding chain_res = leadsto_shadow(chain(3), empty);
  REQUIRE(chain_res.status == SearchStatus::Found);
  CHECK(chain_res.map.size() == 3);

  SetMapping full(6, 1);
  for (int b = 0; b < 6; ++b) full.set(1ull << b, full.ground_mask());
  CHECK(leadsto_shadow(chain(2), full).status == SearchStatus::Exhausted);
  CHECK(leadsto_shadow(antichain(3), full).status == SearchStatus::Found);

  SetMapping cyc = cyclic_shift_mapping(6, 2, 1);
  FreeEmbedding res = leadsto_shadow(chain(2), cyc);
  if (res.status == SearchStatus::Found) {
    // Spot-verify the witness: hull(img(down x)) meets img(down y) inside.
    std::uint64_t d0 = 1ull << res.map[0];
    std::uint64_t d1 = d0 | (1ull << res.map[1]);
    CHECK((cyc.hull(d0) & d1 & ~d0) == 0);
  }

  SetMapping wide(16, 1);
  for (int b = 0; b < 16; ++b) wide.set(1ull << b, wide.ground_mask());
  FreeEmbedding budget = leadsto_shadow(chain(2), wide, Budget{1, 0});
  CHECK(budget.status == SearchStatus::Budget);
}

TEST_CASE("join-irreducible shadow variant") {
  Poset diamond = poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  SetMapping empty(4, 2);
  JiShadowReport rep = ji_shadow_check(diamond, empty);
  CHECK(rep.full.status == SearchStatus::Found);
  REQUIRE(rep.ji.status == SearchStatus::Found);
  CHECK(rep.ji.map[0] == -1);  // bottom is not a carrier
  CHECK(rep.ji.map[3] == -1);  // top is a join
  CHECK(rep.ji.map[1] != rep.ji.map[2]);
  CHECK(rep.ji.map[1] >= 0);
}

TEST_CASE("configuration searches") {
  SetMapping empty(6, 2);
  ConfigResult p = config_search_p(empty);
  REQUIRE(p.status == SearchStatus::Found);
  CHECK(all_distinct(p.xi, p.eta));
  CHECK(config_ok_p(empty, p.xi, p.eta));

  SetMapping full(6, 2);
  for (int b = 0; b < 6; ++b) full.set(1ull << b, full.ground_mask());
  CHECK(config_search_p(full).status == SearchStatus::Exhausted);
  CHECK(config_search_q(full).status == SearchStatus::Exhausted);

  int q_found = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SetMapping f = random_mapping(8, 2, 0.10, seed);
    ConfigResult q = config_search_q(f);
    if (q.status != SearchStatus::Found) continue;
    ++q_found;
    CHECK(all_distinct(q.xi, q.eta));
    // A witness of the stronger configuration solves the weaker one.
    CHECK(config_ok_p(f, q.xi, q.eta));
    CHECK(config_search_p(f).status == SearchStatus::Found);
  }
  CHECK(q_found >= 15);
}

TEST_CASE("generators") {
  SetMapping cyc = cyclic_shift_mapping(5, 2, 2);
  CHECK(cyc.value(0b00001) == 0b00100);
  CHECK(cyc.value(0b01001) == 0b00100);  // {0,3} -> {2,0} minus {0,3} = {2}
  CHECK(cyc.value(0b00101) == 0b10000);  // {0,2} -> {2,4} minus {0,2} = {4}
  SetMapping neg = cyclic_shift_mapping(5, 1, -1);
  CHECK(neg.value(0b00001) == 0b10000);

  SetMapping blk = block_smallest_mapping(4, 2);
  CHECK(blk.value(0b0110) == 0b0001);
  CHECK(blk.value(0b0011) == 0b0100);
  CHECK(blk.value(0b1000) == 0b0001);

  SetMapping a = random_mapping(6, 2, 0.5, 42);
  SetMapping b = random_mapping(6, 2, 0.5, 42);
  SetMapping c = random_mapping(6, 2, 0.5, 43);
  CHECK(a == b);
  CHECK(!(a == c));
  for (const auto& [key, val] : a.entries()) {
    CHECK(popcount(key) <= 2);
    CHECK(key != 0);
    CHECK((val & ~a.ground_mask()) == 0);
  }
  CHECK(random_mapping(6, 2, 0.0, 1).entries().empty());
  CHECK_THROWS_AS(random_mapping(6, 2, 1.5, 1), InvalidArgs);
  CHECK_THROWS_AS(cyclic_shift_mapping(64, 4, 1), CapacityExceeded);
}

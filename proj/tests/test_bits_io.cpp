#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "posetlab/bits.hpp"
#include "posetlab/cubes.hpp"
#include "posetlab/errors.hpp"
#include "posetlab/io.hpp"
#include "posetlab/poset.hpp"

using namespace posetlab;

TEST_CASE("bits basics") {
  Bits b(130);
  CHECK(b.none());
  CHECK(b.count() == 0);
  CHECK(b.lowest() == -1);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK(!b.test(63));
  CHECK(b.lowest() == 0);
  CHECK(b.highest() == 129);
  CHECK(b.any());
  b.reset(0);
  CHECK(b.lowest() == 64);
  CHECK(b.to_vector() == std::vector<int>{64, 129});

  Bits c(130);
  c.set(64);
  CHECK(c.subset_of(b));
  CHECK(!b.subset_of(c));
  CHECK(c.intersects(b));
  Bits d = b & c;
  CHECK(d == c);
  Bits e = b | c;
  CHECK(e == b);
  e.subtract(c);
  CHECK(e.count() == 1);
  CHECK(e.test(129));
  CHECK(and_not(b, c) == e);

  int seen = 0;
  int prev = -1;
  b.for_each([&](int i) {
    CHECK(i > prev);
    prev = i;
    ++seen;
  });
  CHECK(seen == 2);

  b.clear();
  CHECK(b.none());
  b.set_all();
  CHECK(b.count() == 130);
}

TEST_CASE("poset text round trip") {
  std::string text = "# diamond\nn=4\n0<1\n0<2\n1<3\n2<3\n";
  Poset p = parse_poset_text(text);
  CHECK(p.size() == 4);
  CHECK(p.le(0, 3));
  CHECK(p.incomparable(1, 2));
  CHECK(serialize_poset(p) == "n=4\n0<1\n0<2\n1<3\n2<3\n");
  Poset q = parse_poset_text(serialize_poset(p));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(p.le(a, b) == q.le(a, b));
}

TEST_CASE("poset serialization emits the transitive reduction") {
  Poset c = chain(4);
  CHECK(serialize_poset(c) == "n=4\n0<1\n1<2\n2<3\n");
  // A redundant pair in the input does not change the reduction.
  Poset p = parse_poset_text("n=3\n0<1\n1<2\n0<2\n");
  CHECK(serialize_poset(p) == "n=3\n0<1\n1<2\n");
}

TEST_CASE("poset parse errors") {
  CHECK_THROWS_AS(parse_poset_text(""), ParseError);
  CHECK_THROWS_AS(parse_poset_text("m=3\n"), ParseError);
  CHECK_THROWS_AS(parse_poset_text("n=x\n"), ParseError);
  CHECK_THROWS_AS(parse_poset_text("n=3\n0-1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset_text("n=3\n0<7\n"), ParseError);
  CHECK_THROWS_AS(parse_poset_text("n=99999\n"), ParseError);
  // A cover cycle is rejected with a witness.
  try {
    parse_poset_text("n=3\n0<1\n1<2\n2<0\n");
    CHECK(false);
  } catch (const CycleDetected& e) {
    CHECK(e.cycle.size() >= 3);
  }
}

TEST_CASE("named poset sources") {
  CHECK(poset_from_source("bm?m=4&r=2").size() == 12);
  CHECK(poset_from_source("blev?m=3&levels=1,2").size() == 6);
  CHECK(poset_from_source("chain?n=5").size() == 5);
  CHECK(poset_from_source("antichain?n=3").size() == 3);
  CHECK(poset_from_source("powerset?m=3").size() == 8);
  CHECK_THROWS_AS(poset_from_source("torus?n=3"), ParseError);
  CHECK_THROWS_AS(poset_from_source("bm?m=4"), ParseError);
  CHECK_THROWS_AS(poset_from_source("bm?m=4&r=abc"), ParseError);
  CHECK_THROWS_AS(poset_from_source("/nonexistent/path.poset"), ParseError);
}

TEST_CASE("set mapping text round trip") {
  std::string text = "N=4 r=2\n0 -> 1,2\n0,1 -> 3\n2,3 -> -\n";
  SetMapping f = parse_set_mapping(text);
  CHECK(f.ground() == 4);
  CHECK(f.order() == 2);
  CHECK(f.value(0b0001) == 0b0110);
  CHECK(f.value(0b0011) == 0b1000);
  CHECK(f.value(0b1100) == 0);  // "-" stores nothing
  CHECK(f.value(0b0100) == 0);  // missing key
  std::string round = serialize_set_mapping(f);
  CHECK(parse_set_mapping(round) == f);
  CHECK(round == "N=4 r=2\n0 -> 1,2\n0,1 -> 3\n");
}

TEST_CASE("set mapping parse errors") {
  CHECK_THROWS_AS(parse_set_mapping(""), ParseError);
  CHECK_THROWS_AS(parse_set_mapping("N=4\n"), ParseError);
  CHECK_THROWS_AS(parse_set_mapping("N=4 r=9\n"), ParseError);
  CHECK_THROWS_AS(parse_set_mapping("N=4 r=2\n0,1,2 -> 3\n"), ParseError);
  CHECK_THROWS_AS(parse_set_mapping("N=4 r=2\n0 - 3\n"), ParseError);
  CHECK_THROWS_AS(parse_set_mapping("N=4 r=2\n0 -> 9\n"), ParseError);
  CHECK_THROWS_AS(parse_set_mapping("N=70 r=2\n"), ParseError);
}

TEST_CASE("mapping sources") {
  SetMapping f = mapping_from_source("cyclic?n=3&r=1&shift=1");
  CHECK(f.value(0b001) == 0b010);
  CHECK(f.value(0b100) == 0b001);
  SetMapping g = mapping_from_source("block?n=4&r=2");
  CHECK(g.value(0b0001) == 0b0010);
  CHECK(g.value(0b0011) == 0b0100);
  SetMapping r1 = mapping_from_source("random?n=6&r=2&density=0.4&seed=7");
  SetMapping r2 = mapping_from_source("random?n=6&r=2&density=0.4&seed=7");
  SetMapping r3 = mapping_from_source("random?n=6&r=2&density=0.4&seed=8");
  CHECK(r1 == r2);
  CHECK(r1 != r3);
  CHECK_THROWS_AS(mapping_from_source("spiral?n=3"), ParseError);
  CHECK_THROWS_AS(mapping_from_source("random?n=6&r=2&density=1.5"),
                  InvalidArgs);
}

TEST_CASE("subset labels") {
  CHECK(subset_label(0) == "{}");
  CHECK(subset_label(0b101) == "{0,2}");
  CHECK(subset_label(1ull << 63) == "{63}");
}

TEST_CASE("generated mappings round trip through text") {
  for (std::uint64_t seed : {1, 2, 3}) {
    SetMapping f = random_mapping(7, 3, 0.35, seed);
    CHECK(parse_set_mapping(serialize_set_mapping(f)) == f);
  }
}

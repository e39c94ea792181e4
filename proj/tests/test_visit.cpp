#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "turmite/simulate.hpp"
#include "turmite/visit.hpp"

using namespace turmite;

TEST_CASE("minimal visit instance round-trips byte for byte") {
  const std::string minimal = "#(0,0)#E#(0,0)#0";
  VisitInstance v = parse_visit(minimal);
  CHECK(v.cells.empty());
  CHECK(v.start == Cell{0, 0});
  CHECK(v.dir == Dir::E);
  CHECK(v.target == Cell{0, 0});
  CHECK(v.time == 0);
  CHECK(serialize_visit(v) == minimal);
}

TEST_CASE("visit parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_visit(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_visit("#(0,0)#X#(0,0)#0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_visit("#(0,0)#E#(0,0)#0 "), std::invalid_argument);
  CHECK_THROWS_AS(parse_visit("#(0,0)#E#(0,0)#-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_visit("(1,2,-1)#(0,0)#E#(0,0)#5"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_visit("(1,2,0)(1,2,1)#(0,0)#E#(0,0)#5"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_visit("#(0,0)#E#(0,0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_visit("(1,2,3)#(0,0)#E#(0,0)#1,"),
                  std::invalid_argument);

  TurmiteRule rl = parse_rule("RL");
  CHECK_THROWS_AS(parse_visit("(1,2,2)#(0,0)#E#(0,0)#5", &rl),
                  std::invalid_argument);
  CHECK_NOTHROW(parse_visit("(1,2,1)#(0,0)#E#(0,0)#5", &rl));
}

TEST_CASE("time zero never visits, time one counts the start cell") {
  TurmiteRule rule = parse_rule("RL");
  CHECK_FALSE(decide_visit(rule, parse_visit("#(0,0)#E#(0,0)#0")));
  CHECK(decide_visit(rule, parse_visit("#(0,0)#E#(0,0)#1")));
  CHECK_FALSE(decide_visit(rule, parse_visit("#(0,0)#E#(1,0)#1")));
  CHECK(decide_visit(rule, parse_visit("#(0,0)#E#(1,0)#2")));
}

TEST_CASE("decide_visit agrees with direct simulation") {
  std::mt19937_64 rng(0x5eed0011);
  TurmiteRule rule = parse_rule("RRL");
  std::uniform_int_distribution<Coord> coord(-6, 6);
  std::uniform_int_distribution<int> symbol(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    VisitInstance v;
    for (int i = 0; i < 10; ++i) {
      Cell c{coord(rng), coord(rng)};
      bool dup = false;
      for (auto& [seen, _] : v.cells) dup |= seen == c;
      if (!dup) v.cells.emplace_back(c, symbol(rng));
    }
    v.start = {coord(rng), coord(rng)};
    v.dir = static_cast<Dir>(rng() % 4);
    v.target = {coord(rng), coord(rng)};
    v.time = rng() % 200;

    Configuration config = initial_configuration(v, rule.colors());
    Pose pose{v.start, v.dir};
    bool expected = false;
    for (std::uint64_t t = 0; t < v.time; ++t) {
      if (pose.cell == v.target) {
        expected = true;
        break;
      }
      step(rule, config, pose);
    }
    CHECK(decide_visit(rule, v) == expected);
  }
}

TEST_CASE("random instances round-trip through text") {
  std::mt19937_64 rng(0x5eed0012);
  std::uniform_int_distribution<Coord> coord(-1000000, 1000000);
  for (int trial = 0; trial < 200; ++trial) {
    VisitInstance v;
    int m = static_cast<int>(rng() % 20);
    for (int i = 0; i < m; ++i) {
      Cell c{coord(rng), coord(rng)};
      bool dup = false;
      for (auto& [seen, _] : v.cells) dup |= seen == c;
      if (!dup) v.cells.emplace_back(c, static_cast<int>(rng() % 9));
    }
    v.start = {coord(rng), coord(rng)};
    v.dir = static_cast<Dir>(rng() % 4);
    v.target = {coord(rng), coord(rng)};
    v.time = rng() % 1000000;

    std::string text = serialize_visit(v);
    VisitInstance parsed = parse_visit(text);
    CHECK(parsed == v);
    CHECK(serialize_visit(parsed) == text);
  }
}

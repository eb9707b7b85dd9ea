#include <thread>

#include "doctest.h"
#include "support.hpp"

using namespace nano;

TEST_CASE("h-open sets of a three-point example") {
  const NanoSpace s = support::space({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}}, {"a"});
  const Universe& u = s.universe();
  CHECK(to_string(h_open_family(s).members()) == "[{}, {a}, {b,c}, {a,b,c}]");
  CHECK(is_nano_h_open(s, u.from_labels({"b", "c"})));
  CHECK_FALSE(is_nano_h_open(s, u.from_labels({"b"})));
  CHECK(is_nano_h_closed(s, u.from_labels({"a"})));
  CHECK(h_interior(s, u.from_labels({"a", "b"})) == u.from_labels({"a"}));
  CHECK(h_closure(s, u.from_labels({"b"})) == u.from_labels({"b", "c"}));
}

TEST_CASE("no proper non-empty open set makes every subset h-open") {
  const NanoSpace s = support::space({"a", "b", "c"}, {{"a", "b", "c"}}, {"a"});
  CHECK(s.open_family().size() == 2);
  CHECK(h_open_family(s).size() == 8);
}

TEST_CASE("h-open family is cached once and shared between threads") {
  const NanoSpace s = support::space({"a", "b", "c", "d"}, {{"a"}, {"b", "c"}, {"d"}}, {"a", "b"});
  CHECK_FALSE(s.h_family_cached());
  const Mask before = h_interior_mask(s, 0b1010);
  std::vector<std::thread> threads;
  std::vector<const SubsetFamily*> seen(8);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    threads.emplace_back([&, i] { seen[i] = &h_open_family(s).members(); });
  }
  for (auto& t : threads) t.join();
  CHECK(s.h_family_cached());
  for (auto* p : seen) CHECK(p == seen.front());
  CHECK(h_interior_mask(s, 0b1010) == before);
}

TEST_CASE("powerset scans respect the universe cap") {
  const Universe u({"a", "b", "c"});
  SpaceOptions small;
  small.max_universe = 2;
  const NanoSpace s = build_nano_space(make_partition(u, {{"a"}, {"b", "c"}}), u.from_labels({"a"}), small);
  CHECK_THROWS_AS(h_open_family(s), CapExceeded);
  CHECK_THROWS_AS(h_interior(s, u.full_set()), CapExceeded);
  CHECK_THROWS_AS(h_closure(s, u.full_set()), CapExceeded);
  CHECK(is_nano_h_open(s, u.full_set()));
}

TEST_CASE("h-open predicate, family and operators match the oracle up to four points") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : oracle::spaces(n)) {
      const NanoSpace fresh = support::to_space(s);
      const NanoSpace cached = support::to_space(s);
      const auto family = oracle::h_family(s);
      REQUIRE(support::to_family(h_open_family(cached).members()) == family);
      for (const auto& b : oracle::powerset(n)) {
        const Mask m = oracle::to_bits(b);
        REQUIRE(is_nano_h_open_mask(fresh, m) == (family.count(b) != 0));
        const Mask hi = oracle::to_bits(oracle::h_interior(s, b));
        const Mask hc = oracle::to_bits(oracle::h_closure(s, b));
        REQUIRE(h_interior_mask(fresh, m) == hi);
        REQUIRE(h_closure_mask(fresh, m) == hc);
        REQUIRE(h_interior_mask(cached, m) == hi);
        REQUIRE(h_closure_mask(cached, m) == hc);
      }
      CHECK_FALSE(fresh.h_family_cached());
    }
  }
}

TEST_CASE("the h-open family is closed under union and intersection up to four points") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : oracle::spaces(n)) {
      const auto family = oracle::h_family(s);
      for (const auto& a : family) {
        for (const auto& b : family) {
          CHECK(family.count(oracle::unite(a, b)) == 1);
          CHECK(family.count(oracle::intersect(a, b)) == 1);
        }
      }
    }
  }
}

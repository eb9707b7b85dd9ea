#include "doctest.h"
#include "support.hpp"

using namespace nano;

namespace {

bool same(const MapClassification& got, const oracle::Classes& want) {
  return got.nano_continuous == want.continuous && got.nano_open_map == want.open &&
         got.nano_homeomorphism == want.homeo && got.nano_totally_continuous == want.totally &&
         got.nano_contra_continuous == want.contra && got.h_continuous == want.h_continuous &&
         got.h_open_map == want.h_open_map && got.h_irresolute == want.h_irresolute &&
         got.h_homeomorphism == want.h_homeo && got.h_totally_continuous == want.h_totally &&
         got.h_contra_continuous == want.h_contra;
}

}  // namespace

TEST_CASE("point map validation") {
  const NanoSpace d = support::space({"a", "b"}, {{"a", "b"}}, {"a"});
  const NanoSpace v = support::space({"1", "2"}, {{"1"}, {"2"}}, {"1"});
  CHECK_THROWS_AS(PointMap(d, v, {0}), ValidationError);
  CHECK_THROWS_AS(PointMap(d, v, {0, 2}), ValidationError);
  CHECK(PointMap(d, v, {1, 0}).is_bijective());
  CHECK_FALSE(PointMap(d, v, {1, 1}).is_bijective());
  CHECK_THROWS_AS(identity_map(d, v), ValidationError);
}

TEST_CASE("image and preimage") {
  const NanoSpace d = support::space({"a", "b", "c"}, {{"a"}, {"b", "c"}}, {"a"});
  const NanoSpace v = support::space({"1", "2"}, {{"1", "2"}}, {"1"});
  const PointMap f(d, v, {0, 1, 1});
  CHECK(image(f, d.universe().from_labels({"b", "c"})) == v.universe().from_labels({"2"}));
  CHECK(preimage(f, v.universe().from_labels({"2"})) == d.universe().from_labels({"b", "c"}));
  CHECK_THROWS_AS(image(f, v.universe().full_set()), UniverseMismatch);
  CHECK(preimage_mask(f, 0) == 0);
}

TEST_CASE("map class names") {
  for (auto c : kAllMapClasses) {
    CHECK(parse_map_class(cli_name(c)) == c);
    CHECK(parse_map_class(field_name(c)) == c);
  }
  CHECK(parse_map_class("nano-continuous") == MapClass::nano_continuous);
  CHECK(parse_map_class("h-open-map") == MapClass::h_open_map);
  CHECK_FALSE(parse_map_class("smooth").has_value());
}

TEST_CASE("violations name the offending sets") {
  const NanoSpace d = support::space({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}}, {"a", "c"});
  const NanoSpace v = support::space({"a", "b", "c"}, {{"a", "b"}, {"c"}}, {"a", "c"});
  const PointMap f = identity_map(d, v);
  const auto bad = violations(f, MapClass::nano_continuous);
  REQUIRE(bad.size() == 2);
  CHECK(to_string(bad[0]) == "{c}");
  CHECK(to_string(bad[1]) == "{a,b}");
  CHECK(violations(f, MapClass::h_continuous).empty());
}

TEST_CASE("h-continuity conditions report strict inclusions") {
  const NanoSpace d = support::space({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}}, {"a"});
  const NanoSpace v = support::space({"1", "2", "3"}, {{"1"}, {"2", "3"}}, {"2", "3"});
  const auto r = check_h_continuity_conditions(PointMap(d, v, {0, 1, 2}));
  CHECK(r.agree());
  CHECK(r.holds[0]);
  bool found = false;
  for (const auto& s : r.strict) {
    CHECK(s.smaller.is_subset_of(s.larger));
    CHECK_FALSE(s.smaller == s.larger);
    found = found || (s.condition == 5 && to_string(s.argument) == "{1}" && s.smaller.empty());
  }
  CHECK(found);
}

TEST_CASE("classification matches the oracle for every map up to three points") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const auto dom = oracle::spaces(n);
      const auto cod = oracle::spaces(k);
      for (std::size_t i = 0; i < dom.size(); i += 3) {
        for (std::size_t j = 0; j < cod.size(); j += 2) {
          const NanoSpace d = support::to_space(dom[i]);
          const NanoSpace v = support::to_space(cod[j], digit_labels(k));
          for (const auto& f : oracle::maps(n, k)) {
            const PointMap m(d, v, std::vector<std::size_t>(f.begin(), f.end()));
            const auto cls = classify_map(m);
            REQUIRE(same(cls, oracle::classify(dom[i], cod[j], f)));
            CHECK(cls.bijective == oracle::bijective(f, k));
            for (auto c : kAllMapClasses) {
              const bool needs_bijection = c == MapClass::nano_homeomorphism || c == MapClass::h_homeomorphism;
              CHECK(holds(m, c) == ((!needs_bijection || cls.bijective) && violations(m, c).empty()));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("the five conditions match their definitions for every map up to three points") {
  for (int n = 1; n <= 3; ++n) {
    const auto all = oracle::spaces(n);
    for (std::size_t i = 0; i < all.size(); i += 2) {
      for (std::size_t j = 1; j < all.size(); j += 3) {
        const auto& ds = all[i];
        const auto& vs = all[j];
        const NanoSpace d = support::to_space(ds);
        const NanoSpace v = support::to_space(vs, digit_labels(n));
        for (const auto& f : oracle::maps(n, n)) {
          bool c[5] = {true, true, true, true, true};
          for (const auto& o : vs.open) c[0] = c[0] && oracle::h_open(ds, oracle::pre(f, o));
          for (const auto& k : oracle::closed(vs)) c[1] = c[1] && oracle::h_closed(ds, oracle::pre(f, k));
          for (const auto& b : oracle::powerset(n)) {
            c[2] = c[2] && oracle::subset_of(oracle::img(f, oracle::h_closure(ds, b)),
                                             oracle::closure(vs, oracle::img(f, b)));
            c[3] = c[3] && oracle::subset_of(oracle::h_closure(ds, oracle::pre(f, b)),
                                             oracle::pre(f, oracle::closure(vs, b)));
            c[4] = c[4] && oracle::subset_of(oracle::pre(f, oracle::interior(vs, b)),
                                             oracle::h_interior(ds, oracle::pre(f, b)));
          }
          const auto r = check_h_continuity_conditions(PointMap(d, v, std::vector<std::size_t>(f.begin(), f.end())));
          for (int q = 0; q < 5; ++q) REQUIRE(r.holds[q] == c[q]);
        }
      }
    }
  }
}

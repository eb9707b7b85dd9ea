#include <algorithm>

#include "doctest.h"
#include "nano/core_sets.hpp"
#include "oracle.hpp"

using namespace nano;

TEST_CASE("universe validation") {
  CHECK_THROWS_AS(Universe(std::vector<std::string>{}), ValidationError);
  CHECK_THROWS_AS(Universe({"a", ""}), ValidationError);
  CHECK_THROWS_AS(Universe({"a", "b", "a"}), ValidationError);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("e" + std::to_string(i));
  CHECK_THROWS_AS(Universe{many}, CapExceeded);
  many.pop_back();
  CHECK(Universe(many).full_mask() == ~Mask{0});
}

TEST_CASE("universe lookup") {
  const Universe u({"a", "b", "c"});
  CHECK(u.size() == 3);
  CHECK(u.index_of("b") == 1);
  CHECK_FALSE(u.index_of("z").has_value());
  CHECK_THROWS_AS(u.from_labels({"a", "z"}), ValidationError);
  CHECK(u.from_labels({"c", "a"}).bits() == 0b101);
  CHECK(u.full_mask() == 0b111);
  CHECK(Universe({"a", "b", "c"}) == u);
  CHECK_FALSE(Universe({"a", "c", "b"}) == u);
}

TEST_CASE("subset algebra") {
  const Universe u({"a", "b", "c", "d"});
  const Subset ab = u.from_labels({"a", "b"});
  const Subset bc = u.from_labels({"b", "c"});
  CHECK((ab | bc) == u.from_labels({"a", "b", "c"}));
  CHECK((ab & bc) == u.from_labels({"b"}));
  CHECK((ab - bc) == u.from_labels({"a"}));
  CHECK(ab.complement() == u.from_labels({"c", "d"}));
  CHECK(u.from_labels({"b"}).is_subset_of(ab));
  CHECK_FALSE(bc.is_subset_of(ab));
  CHECK(ab.contains("a"));
  CHECK_FALSE(ab.contains("zz"));
  CHECK(to_string(ab) == "{a,b}");
  CHECK(to_string(u.empty_set()) == "{}");
  CHECK(u.full_set().is_full());
  CHECK_THROWS_AS(Subset(u, Mask{1} << 4), ValidationError);
}

TEST_CASE("operations across universes are rejected") {
  const Universe u({"a", "b"});
  const Universe v({"x", "y"});
  CHECK_THROWS_AS((void)(u.full_set() | v.full_set()), UniverseMismatch);
  CHECK_THROWS_AS((void)(u.full_set() == v.full_set()), UniverseMismatch);
  CHECK_THROWS_AS((void)u.full_set().is_subset_of(v.full_set()), UniverseMismatch);
}

TEST_CASE("canonical order is cardinality then sorted index sequence") {
  const Universe u({"a", "b", "c"});
  const auto all = all_masks_canonical(u);
  std::vector<std::string> names;
  for (auto m : all) names.push_back(to_string(u.from_mask(m)));
  CHECK(names == std::vector<std::string>{"{}", "{a}", "{b}", "{c}", "{a,b}", "{a,c}", "{b,c}", "{a,b,c}"});
}

TEST_CASE("canonical order agrees with sorted index vectors on five elements") {
  auto key = [](Mask m) {
    const auto s = oracle::from_bits(m);
    return std::make_pair(s.size(), std::vector<int>(s.begin(), s.end()));
  };
  for (Mask a = 0; a < 32; ++a) {
    for (Mask b = 0; b < 32; ++b) CHECK(canonical_less(a, b) == (key(a) < key(b)));
  }
}

TEST_CASE("families are sorted and deduplicated") {
  const Universe u({"a", "b", "c"});
  const SubsetFamily f(u, std::vector<Mask>{0b111, 0b001, 0, 0b001, 0b110});
  CHECK(f.size() == 4);
  CHECK(to_string(f) == "[{}, {a}, {b,c}, {a,b,c}]");
  CHECK(f.contains_mask(0b110));
  CHECK_FALSE(f.contains_mask(0b010));
  CHECK(f.contains(u.from_labels({"a"})));
  CHECK_THROWS_AS(SubsetFamily(u, std::vector<Mask>{0b1000}), ValidationError);
}

TEST_CASE("partition validation") {
  const Universe u({"a", "b", "c"});
  CHECK_THROWS_AS(make_partition(u, {{"a"}, {"b"}}), ValidationError);
  CHECK_THROWS_AS(make_partition(u, {{"a", "b"}, {"b", "c"}}), ValidationError);
  CHECK_THROWS_AS(make_partition(u, {{"a", "b", "c"}, {}}), ValidationError);
  CHECK_THROWS_AS(make_partition(u, {{"a", "a"}, {"b", "c"}}), ValidationError);
  CHECK_THROWS_AS(make_partition(u, {{"a", "q"}, {"b", "c"}}), ValidationError);
  const Partition p = make_partition(u, {{"c", "b"}, {"a"}});
  REQUIRE(p.blocks().size() == 2);
  CHECK(p.blocks()[0] == u.from_labels({"a"}));
  CHECK(p.block_of("c") == u.from_labels({"b", "c"}));
  CHECK(p.block_index(1) == 1);
  CHECK(p == make_partition(u, {{"a"}, {"b", "c"}}));
  CHECK_FALSE(p == make_partition(u, {{"a", "b"}, {"c"}}));
}

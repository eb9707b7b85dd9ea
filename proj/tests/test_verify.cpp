#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace nano;

TEST_CASE("space counts equal Bell(n) * 2^n") {
  const auto bell = oracle::bell_numbers(7);
  CHECK(bell == std::vector<std::uint64_t>{1, 1, 2, 5, 15, 52, 203});
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(oracle::partitions(static_cast<int>(n)).size() == bell[n]);
    CHECK(enumerate_spaces(n).size() == bell[n] << n);
  }
}

TEST_CASE("enumerated spaces are distinct and match the oracle set") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::pair<std::set<oracle::Set>, oracle::Set>> want;
    for (const auto& s : oracle::spaces(n)) want.insert({std::set<oracle::Set>(s.blocks.begin(), s.blocks.end()), s.x});
    std::set<std::pair<std::set<oracle::Set>, oracle::Set>> got;
    for (const auto& s : enumerate_spaces(static_cast<std::size_t>(n))) {
      std::set<oracle::Set> blocks;
      for (const auto& b : s.partition().blocks()) blocks.insert(oracle::from_bits(b.bits()));
      got.insert({blocks, oracle::from_bits(s.target().bits())});
    }
    CHECK(got == want);
    CHECK(got.size() == enumerate_spaces(static_cast<std::size_t>(n)).size());
  }
}

TEST_CASE("enumeration is capped") {
  SpaceOptions small;
  small.max_universe = 3;
  CHECK_THROWS_AS(enumerate_spaces(4, small), CapExceeded);
}

TEST_CASE("assignments are lexicographic") {
  std::vector<std::vector<std::size_t>> seen;
  for_each_assignment(2, 3, false, [&](std::span<const std::size_t> a) { seen.emplace_back(a.begin(), a.end()); });
  REQUIRE(seen.size() == 9);
  CHECK(seen.front() == std::vector<std::size_t>{0, 0});
  CHECK(seen[1] == std::vector<std::size_t>{0, 1});
  CHECK(seen.back() == std::vector<std::size_t>{2, 2});
  seen.clear();
  for_each_assignment(3, 3, true, [&](std::span<const std::size_t> a) { seen.emplace_back(a.begin(), a.end()); });
  CHECK(seen.size() == 6);
  CHECK(seen[1] == std::vector<std::size_t>{0, 2, 1});
}

TEST_CASE("labels") {
  CHECK(letter_labels(3) == std::vector<std::string>{"a", "b", "c"});
  CHECK(letter_labels(27).back() == "e27");
  CHECK(digit_labels(2) == std::vector<std::string>{"1", "2"});
}

TEST_CASE("implication parsing") {
  auto imp = parse_implication("h-continuous=>continuous");
  REQUIRE(imp);
  CHECK(*imp == kConverseImplications[0]);
  CHECK(parse_implication("open -> h-open") == kForwardImplications[1]);
  CHECK_FALSE(parse_implication("open").has_value());
  CHECK_FALSE(parse_implication("open=>round").has_value());
  CHECK(to_string(kForwardImplications[0]) == "continuous=>h-continuous");
}

TEST_CASE("theorem sweep passes on small instances") {
  SweepOptions options;
  options.max_space_size = 3;
  options.max_map_size = 2;
  for (const auto& r : verify_theorems(options)) {
    INFO(r.id);
    CHECK(r.passed());
    CHECK(r.instances > 0);
  }
}

TEST_CASE("converses have replayable witnesses and forwards have none") {
  for (const auto& imp : kConverseImplications) {
    INFO(to_string(imp));
    const auto w = mine_counterexample(imp, 3, 3);
    REQUIRE(w.has_value());
    CHECK(replay(*w));
    CHECK(w->classification.get(imp.antecedent));
    CHECK_FALSE(w->classification.get(imp.consequent));
  }
  for (const auto& imp : kForwardImplications) {
    INFO(to_string(imp));
    CHECK_FALSE(mine_counterexample(imp, 2, 2).has_value());
  }
}

TEST_CASE("mined witnesses do not depend on the worker count") {
  for (const auto& imp : kConverseImplications) {
    const auto a = mine_counterexample(imp, 3, 3, 1);
    const auto b = mine_counterexample(imp, 3, 3, 4);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->domain == b->domain);
    CHECK(a->codomain == b->codomain);
    CHECK(a->assignment == b->assignment);
  }
}

TEST_CASE("fixture corpus") {
  const auto r = run_fixtures(NANO_FIXTURE_DIR);
  for (const auto& f : r.failures) INFO(f.detail);
  CHECK(r.passed());
  CHECK(r.instances >= 9);
  CHECK_THROWS_AS(run_fixtures("/nonexistent/fixtures"), ParseError);
}

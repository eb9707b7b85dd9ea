#include "nano/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "parallel.hpp"

namespace nano {

namespace {

using Clock = std::chrono::steady_clock;

// Per-theorem accumulator; merged across work items in sweep order.
struct Tally {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
  std::chrono::nanoseconds elapsed{0};

  template <class MakeFailure>
  void expect(bool ok, MakeFailure&& make) {
    ++checks;
    if (ok) return;
    ++failure_count;
    if (failures.size() < kMaxRecordedFailures) failures.push_back(make());
  }

  void merge(Tally&& other) {
    instances += other.instances;
    checks += other.checks;
    failure_count += other.failure_count;
    elapsed += other.elapsed;
    for (auto& f : other.failures) {
      if (failures.size() == kMaxRecordedFailures) break;
      failures.push_back(std::move(f));
    }
  }
};

std::string set_text(const NanoSpace& s, Mask m) { return to_string(s.universe().from_mask(m)); }

Failure space_failure(const NanoSpace& s, std::string detail) {
  return Failure{std::move(detail), describe_space(s), std::nullopt, {}};
}

constexpr bool subset_of(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

// ---------------------------------------------------------------------------
// Set-level theorems, one space at a time.

void rough_laws(const NanoSpace& s, Tally& t) {
  const auto& p = s.partition();
  const Mask full = s.universe().full_mask();
  const Mask x = s.target().bits();
  const auto& a = s.approximations();
  const Mask lower = a.lower.bits();
  const Mask upper = a.upper.bits();
  t.expect(subset_of(lower, x) && subset_of(x, upper),
           [&] { return space_failure(s, "lower <= X <= upper violated"); });
  t.expect(a.boundary.bits() == (upper & ~lower), [&] { return space_failure(s, "boundary != upper \\ lower"); });
  for (const auto& block : p.blocks()) {
    const Mask b = block.bits();
    t.expect((lower & b) == 0 || (lower & b) == b,
             [&] { return space_failure(s, "lower approximation splits block " + to_string(block)); });
    t.expect((upper & b) == 0 || (upper & b) == b,
             [&] { return space_failure(s, "upper approximation splits block " + to_string(block)); });
  }
  const Subset x_complement = s.target().complement();
  t.expect(lower == (~upper_approximation(p, x_complement).bits() & full),
           [&] { return space_failure(s, "lower(X) != ~upper(~X)"); });
  // Monotonicity against every superset of X.
  const Mask free = full & ~x;
  for (Mask extra = free;; extra = (extra - 1) & free) {
    const Subset bigger = s.universe().from_mask(x | extra);
    t.expect(subset_of(lower, lower_approximation(p, bigger).bits()) &&
                 subset_of(upper, upper_approximation(p, bigger).bits()),
             [&] { return space_failure(s, "approximations not monotone towards " + to_string(bigger)); });
    if (extra == 0) break;
  }
}

void topology_laws(const NanoSpace& s, Tally& t) {
  const auto& open = s.open_family();
  const Mask full = s.universe().full_mask();
  t.expect(satisfies_topology_axioms(open), [&] { return space_failure(s, "open family is not a topology"); });
  t.expect(open.size() >= 2 && open.size() <= 5,
           [&] { return space_failure(s, "open family has " + std::to_string(open.size()) + " members"); });
  for (Mask b = 0; b <= full; ++b) {
    const Mask in = n_interior_mask(s, b);
    const Mask cl = n_closure_mask(s, b);
    t.expect(subset_of(in, b) && subset_of(b, cl),
             [&] { return space_failure(s, "nInt(B) <= B <= nCl(B) fails for " + set_text(s, b)); });
    t.expect(cl == (~n_interior_mask(s, ~b & full) & full),
             [&] { return space_failure(s, "nCl(B) != ~nInt(~B) for " + set_text(s, b)); });
    t.expect(open.contains_mask(b) == (in == b),
             [&] { return space_failure(s, "open <=> nInt fixed point fails for " + set_text(s, b)); });
    t.expect(s.closed_family().contains_mask(b) == (cl == b),
             [&] { return space_failure(s, "closed <=> nCl fixed point fails for " + set_text(s, b)); });
    t.expect(n_interior_mask(s, in) == in && n_closure_mask(s, cl) == cl,
             [&] { return space_failure(s, "nInt/nCl not idempotent at " + set_text(s, b)); });
  }
}

void open_sets_are_h_open(const NanoSpace& s, Tally& t) {
  for (Mask o : s.open_family().masks()) {
    t.expect(is_nano_h_open_mask(s, o), [&] { return space_failure(s, "open set " + set_text(s, o) + " is not h-open"); });
  }
}

void h_open_pairwise(const NanoSpace& s, Tally& t) {
  const auto members = h_open_family(s).members().masks();
  for (Mask a : members) {
    for (Mask b : members) {
      t.expect(is_nano_h_open_mask(s, a & b) && is_nano_h_open_mask(s, a | b), [&] {
        return space_failure(s, "h-open " + set_text(s, a) + " and " + set_text(s, b) + " not closed under meet/join");
      });
    }
  }
}

void open_with_h_open(const NanoSpace& s, Tally& t) {
  const Mask full = s.universe().full_mask();
  for (Mask o : s.open_family().masks()) {
    for (Mask b = 0; b <= full; ++b) {
      if (!is_nano_h_open_mask(s, b)) continue;
      t.expect(is_nano_h_open_mask(s, o & b) && is_nano_h_open_mask(s, o | b), [&] {
        return space_failure(s, "open " + set_text(s, o) + " with h-open " + set_text(s, b) + " leaves the h-open sets");
      });
    }
  }
}

void h_monotone(const NanoSpace& s, Tally& t) {
  const Mask full = s.universe().full_mask();
  for (Mask b2 = 0; b2 <= full; ++b2) {
    for (Mask b1 = b2;; b1 = (b1 - 1) & b2) {
      t.expect(subset_of(h_interior_mask(s, b1), h_interior_mask(s, b2)) &&
                   subset_of(h_closure_mask(s, b1), h_closure_mask(s, b2)),
               [&] { return space_failure(s, "hInt/hCl not monotone on " + set_text(s, b1) + " <= " + set_text(s, b2)); });
      if (b1 == 0) break;
    }
  }
}

void h_fixed_points(const NanoSpace& s, Tally& t) {
  const Mask full = s.universe().full_mask();
  for (Mask b = 0; b <= full; ++b) {
    const Mask in = h_interior_mask(s, b);
    const Mask cl = h_closure_mask(s, b);
    t.expect(subset_of(in, b) && subset_of(b, cl),
             [&] { return space_failure(s, "hInt(B) <= B <= hCl(B) fails for " + set_text(s, b)); });
    t.expect(is_nano_h_open_mask(s, b) == (in == b),
             [&] { return space_failure(s, "h-open <=> hInt fixed point fails for " + set_text(s, b)); });
    t.expect(is_nano_h_open_mask(s, ~b & full) == (cl == b),
             [&] { return space_failure(s, "h-closed <=> hCl fixed point fails for " + set_text(s, b)); });
  }
}

void h_duality(const NanoSpace& s, Tally& t) {
  const Mask full = s.universe().full_mask();
  for (Mask b = 0; b <= full; ++b) {
    t.expect(h_closure_mask(s, b) == (~h_interior_mask(s, ~b & full) & full),
             [&] { return space_failure(s, "hCl(B) != ~hInt(~B) for " + set_text(s, b)); });
  }
}

void h_family_oracle(const NanoSpace& s, Tally& t) {
  const auto& family = h_open_family(s).members();
  const Mask full = s.universe().full_mask();
  t.expect(family.contains_mask(0) && family.contains_mask(full),
           [&] { return space_failure(s, "h-open family misses {} or U"); });
  // A second space over the same data has no cache, so h_interior takes the
  // on-demand route there.
  SpaceOptions options;
  options.max_universe = s.max_universe();
  const NanoSpace fresh = build_nano_space(s.partition(), s.target(), options);
  for (Mask b = 0; b <= full; ++b) {
    t.expect(family.contains_mask(b) == (h_interior_mask(fresh, b) == b),
             [&] { return space_failure(s, "scanned family and hInt fixed points disagree at " + set_text(s, b)); });
  }
}

struct SpaceTheorem {
  const char* id;
  const char* statement;
  void (*run)(const NanoSpace&, Tally&);
};

constexpr std::array<SpaceTheorem, 9> kSpaceTheorems = {{
    {"rough-approximation-laws", "lower(X) <= X <= upper(X), both unions of blocks, lower(X) = ~upper(~X), monotone in X",
     rough_laws},
    {"nano-topology-laws", "open family is a topology of 2..5 sets; nInt/nCl are dual, deflationary/inflationary, idempotent",
     topology_laws},
    {"open-sets-are-h-open", "every nano open set is nano h-open", open_sets_are_h_open},
    {"h-open-pairwise-closure", "the meet and join of two nano h-open sets are nano h-open", h_open_pairwise},
    {"open-with-h-open", "the meet and join of a nano open set and a nano h-open set are nano h-open", open_with_h_open},
    {"h-operators-monotone", "B1 <= B2 implies hInt(B1) <= hInt(B2) and hCl(B1) <= hCl(B2)", h_monotone},
    {"h-operators-fixed-points", "hInt(B) <= B <= hCl(B); B h-open iff B = hInt(B); B h-closed iff B = hCl(B)",
     h_fixed_points},
    {"h-operators-duality", "hCl(B) = ~hInt(~B)", h_duality},
    {"h-family-interior-oracle", "the scanned h-open family equals the fixed points of hInt computed on demand",
     h_family_oracle},
}};

// ---------------------------------------------------------------------------
// Map-level theorems, one map at a time.

Failure map_failure(const PointMap& map, std::string detail) {
  return Failure{std::move(detail), describe_space(map.domain()), describe_space(map.codomain()),
                 describe_assignment(map)};
}

constexpr std::size_t kMapTheoremCount = 2 + kForwardImplications.size();

std::string implication_id(const Implication& i) {
  return "implies:" + std::string(cli_name(i.antecedent)) + "=>" + std::string(cli_name(i.consequent));
}

void run_map_theorems(const PointMap& map, std::array<Tally, kMapTheoremCount>& tallies) {
  auto start = Clock::now();
  const auto conditions = check_h_continuity_conditions(map);
  const auto cls = classify_map(map);
  auto& characterization = tallies[0];
  ++characterization.instances;
  characterization.expect(conditions.agree() && conditions.holds[0] == cls.h_continuous, [&] {
    std::string bits;
    for (bool b : conditions.holds) bits += b ? '1' : '0';
    return map_failure(map, "characterizations disagree: " + bits);
  });
  auto mid = Clock::now();
  characterization.elapsed += mid - start;

  auto& homeo = tallies[1];
  ++homeo.instances;
  homeo.expect(cls.nano_homeomorphism == (cls.bijective && cls.nano_continuous && cls.nano_open_map) &&
                   cls.h_homeomorphism == (cls.bijective && cls.h_continuous && cls.h_open_map),
               [&] { return map_failure(map, "homeomorphism flags inconsistent with their parts"); });

  for (std::size_t k = 0; k < kForwardImplications.size(); ++k) {
    const auto& imp = kForwardImplications[k];
    auto& t = tallies[2 + k];
    ++t.instances;
    t.expect(!cls.get(imp.antecedent) || cls.get(imp.consequent),
             [&] { return map_failure(map, to_string(imp) + " fails"); });
  }
  // Classification cost is shared; book it on the homeomorphism report.
  homeo.elapsed += Clock::now() - mid;
}

std::vector<std::vector<NanoSpace>> spaces_up_to(std::size_t max_size, bool digits, SpaceOptions options) {
  std::vector<std::vector<NanoSpace>> out(max_size + 1);
  for (std::size_t n = 1; n <= max_size; ++n) {
    out[n] = enumerate_spaces(Universe(digits ? digit_labels(n) : letter_labels(n)), options);
  }
  return out;
}

struct MapItem {
  std::size_t domain_size;
  std::size_t codomain_size;
  std::size_t domain_index;
};

std::vector<MapItem> map_items(std::size_t max_domain, std::size_t max_codomain,
                               const std::vector<std::vector<NanoSpace>>& domains) {
  std::vector<MapItem> items;
  for (std::size_t du = 1; du <= max_domain; ++du) {
    for (std::size_t dv = 1; dv <= max_codomain; ++dv) {
      for (std::size_t i = 0; i < domains[du].size(); ++i) items.push_back({du, dv, i});
    }
  }
  return items;
}

TheoremReport to_report(std::string id, std::string statement, Tally&& t) {
  TheoremReport r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.instances = t.instances;
  r.checks = t.checks;
  r.failure_count = t.failure_count;
  r.failures = std::move(t.failures);
  r.elapsed = t.elapsed;
  return r;
}

void require_sizes(std::size_t size, std::size_t cap, const char* what) {
  if (size == 0) throw ValidationError(std::string(what) + " must be at least 1");
  if (size > cap) {
    throw CapExceeded(std::string(what) + " " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  }
}

void restricted_growth(std::size_t n, std::vector<std::size_t>& rgs, std::size_t pos, std::size_t max_block,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (pos == n) {
    visit(rgs);
    return;
  }
  for (std::size_t b = 0; b <= max_block + 1; ++b) {
    rgs[pos] = b;
    restricted_growth(n, rgs, pos + 1, std::max(max_block, b), visit);
  }
}

}  // namespace

std::optional<Implication> parse_implication(std::string_view text) {
  std::size_t split = text.find("=>");
  if (split == std::string_view::npos) split = text.find("->");
  if (split == std::string_view::npos) return std::nullopt;
  auto a = parse_map_class(text.substr(0, split));
  auto b = parse_map_class(text.substr(split + 2));
  if (!a || !b) return std::nullopt;
  return Implication{*a, *b};
}

std::string to_string(const Implication& implication) {
  return std::string(cli_name(implication.antecedent)) + "=>" + std::string(cli_name(implication.consequent));
}

bool replay(const Witness& witness) {
  MapFile file{witness.domain, witness.codomain, witness.assignment};
  const PointMap map = build_map(file);
  const auto cls = classify_map(map);
  return cls == witness.classification && cls.get(witness.implication.antecedent) &&
         !cls.get(witness.implication.consequent);
}

std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i + 1));
  }
  return out;
}

std::vector<std::string> digit_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i + 1));
  return out;
}

void for_each_space(const Universe& universe, SpaceOptions options,
                    const std::function<void(const NanoSpace&)>& visit) {
  const std::size_t n = universe.size();
  require_sizes(n, options.max_universe, "universe size");
  const auto targets = all_masks_canonical(universe);
  std::vector<std::size_t> rgs(n, 0);
  restricted_growth(n, rgs, 1, 0, [&](const std::vector<std::size_t>& labels) {
    const std::size_t blocks = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<Mask> masks(blocks, 0);
    for (std::size_t i = 0; i < n; ++i) masks[labels[i]] |= Mask{1} << i;
    std::vector<Subset> subsets;
    subsets.reserve(blocks);
    for (Mask m : masks) subsets.emplace_back(universe, m);
    const Partition partition = make_partition(universe, std::move(subsets));
    for (Mask x : targets) visit(build_nano_space(partition, universe.from_mask(x), options));
  });
}

std::vector<NanoSpace> enumerate_spaces(const Universe& universe, SpaceOptions options) {
  std::vector<NanoSpace> out;
  for_each_space(universe, options, [&](const NanoSpace& s) { out.push_back(s); });
  return out;
}

std::vector<NanoSpace> enumerate_spaces(std::size_t n, SpaceOptions options) {
  require_sizes(n, options.max_universe, "universe size");
  return enumerate_spaces(Universe(letter_labels(n)), options);
}

void for_each_assignment(std::size_t domain_size, std::size_t codomain_size, bool bijective_only,
                         const std::function<void(std::span<const std::size_t>)>& visit) {
  if (bijective_only) {
    if (domain_size != codomain_size) throw ValidationError("bijections need domain and codomain of equal size");
    std::vector<std::size_t> perm(domain_size);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      visit(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return;
  }
  if (codomain_size == 0) return;
  std::vector<std::size_t> a(domain_size, 0);
  while (true) {
    visit(a);
    std::size_t pos = domain_size;
    while (pos > 0 && a[pos - 1] + 1 == codomain_size) a[--pos] = 0;
    if (pos == 0) return;
    ++a[pos - 1];
  }
}

std::vector<PointMap> enumerate_maps(const NanoSpace& domain, const NanoSpace& codomain, bool bijective_only) {
  std::vector<PointMap> out;
  for_each_assignment(domain.universe().size(), codomain.universe().size(), bijective_only,
                      [&](std::span<const std::size_t> a) {
                        out.emplace_back(domain, codomain, std::vector<std::size_t>(a.begin(), a.end()));
                      });
  return out;
}

std::vector<TheoremReport> verify_theorems(const SweepOptions& options) {
  require_sizes(options.max_space_size, options.max_universe, "max space size");
  require_sizes(options.max_map_size, options.max_universe, "max map size");
  SpaceOptions space_options;
  space_options.max_universe = options.max_universe;
  space_options.audit = true;

  std::vector<TheoremReport> reports;

  // Set-level theorems.
  {
    std::vector<NanoSpace> spaces;
    for (std::size_t n = 1; n <= options.max_space_size; ++n) {
      auto batch = enumerate_spaces(n, space_options);
      spaces.insert(spaces.end(), batch.begin(), batch.end());
    }
    std::vector<std::array<Tally, kSpaceTheorems.size()>> partial(spaces.size());
    detail::parallel_for(spaces.size(), options.workers, [&](std::size_t i) {
      for (std::size_t k = 0; k < kSpaceTheorems.size(); ++k) {
        auto start = Clock::now();
        auto& t = partial[i][k];
        ++t.instances;
        kSpaceTheorems[k].run(spaces[i], t);
        t.elapsed += Clock::now() - start;
      }
    });
    for (std::size_t k = 0; k < kSpaceTheorems.size(); ++k) {
      Tally total;
      for (auto& p : partial) total.merge(std::move(p[k]));
      reports.push_back(to_report(kSpaceTheorems[k].id, kSpaceTheorems[k].statement, std::move(total)));
    }
  }

  // Map-level theorems.
  {
    const auto domains = spaces_up_to(options.max_map_size, false, space_options);
    const auto codomains = spaces_up_to(options.max_map_size, true, space_options);
    const auto items = map_items(options.max_map_size, options.max_map_size, domains);
    std::vector<std::array<Tally, kMapTheoremCount>> partial(items.size());
    detail::parallel_for(items.size(), options.workers, [&](std::size_t i) {
      const auto& item = items[i];
      const NanoSpace& dom = domains[item.domain_size][item.domain_index];
      for (const NanoSpace& cod : codomains[item.codomain_size]) {
        for_each_assignment(item.domain_size, item.codomain_size, false, [&](std::span<const std::size_t> a) {
          run_map_theorems(PointMap(dom, cod, std::vector<std::size_t>(a.begin(), a.end())), partial[i]);
        });
      }
    });
    std::array<std::string, kMapTheoremCount> ids;
    std::array<std::string, kMapTheoremCount> statements;
    ids[0] = "h-continuity-characterizations";
    statements[0] =
        "h-continuity, h-closed preimages of closed sets, image(hCl B) <= nCl(image B), "
        "hCl(preimage C) <= preimage(nCl C) and preimage(nInt C) <= hInt(preimage C) are equivalent";
    ids[1] = "homeomorphism-definitions";
    statements[1] = "(h-)homeomorphism = bijective and (h-)continuous and (h-)open";
    for (std::size_t k = 0; k < kForwardImplications.size(); ++k) {
      ids[2 + k] = implication_id(kForwardImplications[k]);
      statements[2 + k] = "every " + std::string(cli_name(kForwardImplications[k].antecedent)) + " map is " +
                          std::string(cli_name(kForwardImplications[k].consequent));
    }
    for (std::size_t k = 0; k < kMapTheoremCount; ++k) {
      Tally total;
      for (auto& p : partial) total.merge(std::move(p[k]));
      reports.push_back(to_report(ids[k], statements[k], std::move(total)));
    }
  }
  return reports;
}

std::optional<Witness> mine_counterexample(const Implication& implication, std::size_t max_domain,
                                           std::size_t max_codomain, unsigned workers, std::size_t max_universe) {
  require_sizes(max_domain, max_universe, "max domain size");
  require_sizes(max_codomain, max_universe, "max codomain size");
  SpaceOptions options;
  options.max_universe = max_universe;
  const auto domains = spaces_up_to(max_domain, false, options);
  const auto codomains = spaces_up_to(max_codomain, true, options);
  const auto items = map_items(max_domain, max_codomain, domains);

  std::vector<std::optional<Witness>> found(items.size());
  std::atomic<std::size_t> best{items.size()};
  detail::parallel_for(items.size(), workers, [&](std::size_t i) {
    if (i > best.load()) return;
    const auto& item = items[i];
    const NanoSpace& dom = domains[item.domain_size][item.domain_index];
    for (const NanoSpace& cod : codomains[item.codomain_size]) {
      bool done = false;
      for_each_assignment(item.domain_size, item.codomain_size, false, [&](std::span<const std::size_t> a) {
        if (done) return;
        PointMap map(dom, cod, std::vector<std::size_t>(a.begin(), a.end()));
        if (holds(map, implication.antecedent) && !holds(map, implication.consequent)) {
          found[i] = Witness{implication, describe_space(dom), describe_space(cod), describe_assignment(map),
                             classify_map(map)};
          done = true;
        }
      });
      if (done) {
        std::size_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
        return;
      }
    }
  });
  for (auto& w : found) {
    if (w) return std::move(*w);
  }
  return std::nullopt;
}

}  // namespace nano

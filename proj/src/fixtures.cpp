// Replays the example corpus: each fixture is a space or map document with an
// "expect" block listing the families, operator values, classification flags
// and witnesses the example asserts.

#include <algorithm>

#include "nano/verify.hpp"

namespace nano {

namespace {

using nlohmann::json;

class FixtureRun {
 public:
  FixtureRun(std::string file, std::size_t& checks, std::size_t& failure_count, std::vector<Failure>& failures)
      : file_(std::move(file)), checks_(checks), failure_count_(failure_count), failures_(failures) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failure_count_;
    if (failures_.size() < kMaxRecordedFailures) failures_.push_back(Failure{file_ + ": " + what, {}, {}, {}});
  }

  void space(const json& exp, const NanoSpace& s, const std::string& side) {
    for (const auto& [key, value] : exp.items()) {
      const std::string where = side + "." + key;
      if (key == "open_family") {
        family(value, s.open_family(), where);
      } else if (key == "closed_family") {
        family(value, s.closed_family(), where);
      } else if (key == "h_family") {
        const auto& actual = h_open_family(s).members();
        if (value == "powerset") {
          expect(actual.size() == (std::size_t{1} << s.universe().size()), where + ": expected the whole powerset, got " +
                                                                                  to_string(actual));
        } else {
          family(value, actual, where);
        }
      } else if (key == "lower" || key == "upper" || key == "boundary") {
        const auto& a = s.approximations();
        const Subset& actual = key == "lower" ? a.lower : key == "upper" ? a.upper : a.boundary;
        same(subset(s, value), actual, where);
      } else if (key == "rough") {
        expect(is_rough(s.partition(), s.target()) == value.get<bool>(), where);
      } else if (key == "h_open" || key == "not_h_open" || key == "h_closed" || key == "not_h_closed") {
        const bool want = key.rfind("not_", 0) != 0;
        const bool closed = key.find("closed") != std::string::npos;
        for (const auto& item : value) {
          const Subset b = subset(s, item);
          const bool got = closed ? is_nano_h_closed(s, b) : is_nano_h_open(s, b);
          expect(got == want, where + " " + to_string(b));
        }
      } else if (key == "interior" || key == "closure" || key == "h_interior" || key == "h_closure") {
        for (const auto& item : value) {
          const Subset b = subset(s, item.at("set"));
          const Subset got = key == "interior"     ? n_interior(s, b)
                             : key == "closure"    ? n_closure(s, b)
                             : key == "h_interior" ? h_interior(s, b)
                                                   : h_closure(s, b);
          same(subset(s, item.at("result")), got, where + "(" + to_string(b) + ")");
        }
      } else {
        expect(false, "unknown expectation '" + where + "'");
      }
    }
  }

  void map(const json& exp, const PointMap& m) {
    for (const auto& [key, value] : exp.items()) {
      if (key == "domain") {
        space(value, m.domain(), "domain");
      } else if (key == "codomain") {
        space(value, m.codomain(), "codomain");
      } else if (key == "classification") {
        const auto cls = classify_map(m);
        for (const auto& [name, want] : value.items()) {
          if (name == "bijective") {
            expect(cls.bijective == want.get<bool>(), "classification.bijective");
            continue;
          }
          auto c = parse_map_class(name);
          if (!c) {
            expect(false, "unknown map class '" + name + "'");
            continue;
          }
          expect(cls.get(*c) == want.get<bool>(), "classification." + name);
        }
      } else if (key == "violations") {
        for (const auto& [name, sets] : value.items()) {
          auto c = parse_map_class(name);
          if (!c) {
            expect(false, "unknown map class '" + name + "'");
            continue;
          }
          const auto found = violations(m, *c);
          for (const auto& item : sets) {
            const auto labels = item.get<std::vector<std::string>>();
            const bool present = std::any_of(found.begin(), found.end(), [&](const Subset& v) { return v.labels() == labels; });
            expect(present, "violations." + name + " lacks " + json(labels).dump());
          }
        }
      } else if (key == "conditions") {
        const auto got = check_h_continuity_conditions(m);
        const auto want = value.get<std::vector<bool>>();
        expect(want.size() == 5 && std::equal(want.begin(), want.end(), got.holds.begin()), "conditions");
      } else if (key == "strict") {
        const auto got = check_h_continuity_conditions(m);
        for (const auto& item : value) {
          const int condition = item.at("condition").get<int>();
          const auto argument = item.at("argument").get<std::vector<std::string>>();
          const auto smaller = item.at("smaller").get<std::vector<std::string>>();
          const auto larger = item.at("larger").get<std::vector<std::string>>();
          const bool present = std::any_of(got.strict.begin(), got.strict.end(), [&](const StrictInclusion& s) {
            return s.condition == condition && s.argument.labels() == argument && s.smaller.labels() == smaller &&
                   s.larger.labels() == larger;
          });
          expect(present, "strict inclusion " + item.dump());
        }
      } else if (key == "images" || key == "preimages") {
        const bool forward = key == "images";
        for (const auto& item : value) {
          const NanoSpace& from = forward ? m.domain() : m.codomain();
          const NanoSpace& to = forward ? m.codomain() : m.domain();
          const Subset b = subset(from, item.at("set"));
          same(subset(to, item.at("result")), forward ? image(m, b) : preimage(m, b), key + "(" + to_string(b) + ")");
        }
      } else {
        expect(false, "unknown expectation '" + key + "'");
      }
    }
  }

 private:
  static Subset subset(const NanoSpace& s, const json& labels) {
    return s.universe().from_labels(labels.get<std::vector<std::string>>());
  }

  void same(const Subset& want, const Subset& got, const std::string& where) {
    expect(want.bits() == got.bits(), where + ": expected " + to_string(want) + ", got " + to_string(got));
  }

  void family(const json& value, const SubsetFamily& actual, const std::string& where) {
    std::vector<Mask> masks;
    for (const auto& item : value) {
      masks.push_back(actual.universe().from_labels(item.get<std::vector<std::string>>()).bits());
    }
    const SubsetFamily want(actual.universe(), std::move(masks));
    expect(want == actual, where + ": expected " + to_string(want) + ", got " + to_string(actual));
  }

  std::string file_;
  std::size_t& checks_;
  std::size_t& failure_count_;
  std::vector<Failure>& failures_;
};

}  // namespace

TheoremReport run_fixtures(const std::filesystem::path& dir, SpaceOptions options) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.id = "example-fixtures";
  report.statement = "every example space and map reproduces its recorded families, operators and classifications";

  if (!std::filesystem::is_directory(dir)) throw ParseError("fixture directory '" + dir.string() + "' not found");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  for (const auto& path : files) {
    ++report.instances;
    FixtureRun run(path.filename().string(), report.checks, report.failure_count, report.failures);
    try {
      const json doc = read_json(path);
      const json expect = doc.value("expect", json::object());
      if (doc.contains("map")) {
        run.map(expect, build_map(parse_map_file(doc, path.parent_path()), options));
      } else {
        run.space(expect, build_space(parse_space_file(doc), options), "space");
      }
    } catch (const std::exception& e) {
      run.expect(false, std::string("error: ") + e.what());
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace nano

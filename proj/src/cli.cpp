#include "nano/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nano/files.hpp"
#include "nano/verify.hpp"

namespace nano {

namespace {

using nlohmann::ordered_json;

enum class Format { text, json };

struct Globals {
  Format format = Format::text;
  std::size_t max_universe = kDefaultMaxUniverse;

  SpaceOptions space_options() const {
    SpaceOptions o;
    o.max_universe = max_universe;
    return o;
  }
};

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string join_sets(const SubsetFamily& family) {
  std::string out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i != 0) out += ' ';
    out += to_string(family[i]);
  }
  return out;
}

std::string labels_text(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i != 0) out += ',';
    out += labels[i];
  }
  return out + "}";
}

std::string space_line(const SpaceFile& f) {
  std::string out = "universe " + labels_text(f.universe) + "; partition";
  for (const auto& block : f.partition) out += " " + labels_text(block);
  return out + "; x " + labels_text(f.x);
}

std::string assignment_text(const std::vector<std::pair<std::string, std::string>>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != 0) out += ' ';
    out += a[i].first + "->" + a[i].second;
  }
  return out;
}

ordered_json assignment_json(const std::vector<std::pair<std::string, std::string>>& a) {
  ordered_json out = ordered_json::object();
  for (const auto& [from, to] : a) out[from] = to;
  return out;
}

ordered_json classification_json(const MapClassification& cls) {
  ordered_json out;
  out["bijective"] = cls.bijective;
  for (auto c : kAllMapClasses) out[std::string(field_name(c))] = cls.get(c);
  return out;
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_space(const Globals& g, const std::string& path, bool with_h, std::ostream& out) {
  const NanoSpace s = build_space(load_space_file(path), g.space_options());
  const auto& a = s.approximations();
  const bool rough = is_rough(s.partition(), s.target());
  std::optional<HFamily> h;
  if (with_h) h = h_open_family(s);

  if (g.format == Format::json) {
    ordered_json doc = to_json(describe_space(s));
    doc["lower"] = to_json(a.lower);
    doc["upper"] = to_json(a.upper);
    doc["boundary"] = to_json(a.boundary);
    doc["rough"] = rough;
    doc["open_family"] = to_json(s.open_family());
    doc["closed_family"] = to_json(nano_closed_sets(s));
    if (h) doc["h_family"] = to_json(h->members());
    emit(out, doc);
    return kExitOk;
  }
  const auto f = describe_space(s);
  out << "universe: " << labels_text(f.universe) << '\n';
  out << "partition:";
  for (const auto& block : f.partition) out << ' ' << labels_text(block);
  out << '\n';
  out << "x: " << to_string(s.target()) << '\n';
  out << "lower: " << to_string(a.lower) << '\n';
  out << "upper: " << to_string(a.upper) << '\n';
  out << "boundary: " << to_string(a.boundary) << '\n';
  out << "rough: " << bool_text(rough) << '\n';
  out << "open (" << s.open_family().size() << "): " << join_sets(s.open_family()) << '\n';
  const auto closed = nano_closed_sets(s);
  out << "closed (" << closed.size() << "): " << join_sets(closed) << '\n';
  if (h) out << "h-open (" << h->size() << "): " << join_sets(h->members()) << '\n';
  return kExitOk;
}

constexpr std::array<std::string_view, 6> kSetOps = {"nint", "ncl", "ninth", "nclh", "is-hopen", "is-hclosed"};

Subset parse_set_argument(const Universe& u, std::string text) {
  std::erase_if(text, [](char c) { return c == '{' || c == '}' || c == ' '; });
  std::vector<std::string> labels;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) labels.push_back(item);
  }
  return u.from_labels(labels);
}

int cmd_set(const Globals& g, const std::string& path, const std::string& set_text,
            const std::vector<std::string>& ops, std::ostream& out) {
  for (const auto& op : ops) {
    if (std::find(kSetOps.begin(), kSetOps.end(), op) == kSetOps.end()) throw ParseError("unknown operation '" + op + "'");
  }
  const NanoSpace s = build_space(load_space_file(path), g.space_options());
  const Subset b = parse_set_argument(s.universe(), set_text);
  auto wanted = [&](std::string_view op) {
    return ops.empty() || std::find(ops.begin(), ops.end(), op) != ops.end();
  };

  ordered_json doc;
  doc["set"] = to_json(b);
  std::ostringstream text;
  text << "set: " << to_string(b) << '\n';
  auto put_set = [&](std::string_view op, const Subset& r) {
    doc[std::string(op)] = to_json(r);
    text << op << ": " << to_string(r) << '\n';
  };
  auto put_bool = [&](std::string_view op, bool r) {
    doc[std::string(op)] = r;
    text << op << ": " << bool_text(r) << '\n';
  };
  if (wanted("nint")) put_set("nint", n_interior(s, b));
  if (wanted("ncl")) put_set("ncl", n_closure(s, b));
  if (wanted("ninth")) put_set("ninth", h_interior(s, b));
  if (wanted("nclh")) put_set("nclh", h_closure(s, b));
  if (wanted("is-hopen")) put_bool("is-hopen", is_nano_h_open(s, b));
  if (wanted("is-hclosed")) put_bool("is-hclosed", is_nano_h_closed(s, b));

  if (g.format == Format::json) {
    emit(out, doc);
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_map(const Globals& g, const std::string& path, bool with_conditions, std::ostream& out) {
  const PointMap m = build_map(load_map_file(path), g.space_options());
  const auto cls = classify_map(m);
  const auto dom = describe_space(m.domain());
  const auto cod = describe_space(m.codomain());
  const auto assignment = describe_assignment(m);
  std::optional<HContinuityConditions> conditions;
  if (with_conditions) conditions = check_h_continuity_conditions(m);

  if (g.format == Format::json) {
    ordered_json doc;
    doc["domain"] = to_json(dom);
    doc["codomain"] = to_json(cod);
    doc["map"] = assignment_json(assignment);
    doc["classification"] = classification_json(cls);
    ordered_json viol = ordered_json::object();
    for (auto c : kAllMapClasses) {
      ordered_json sets = ordered_json::array();
      for (const auto& v : violations(m, c)) sets.push_back(to_json(v));
      viol[std::string(field_name(c))] = sets;
    }
    doc["violations"] = viol;
    if (conditions) {
      ordered_json cond;
      cond["holds"] = conditions->holds;
      cond["strict"] = ordered_json::array();
      for (const auto& s : conditions->strict) {
        ordered_json item;
        item["condition"] = s.condition;
        item["argument"] = to_json(s.argument);
        item["smaller"] = to_json(s.smaller);
        item["larger"] = to_json(s.larger);
        cond["strict"].push_back(item);
      }
      doc["conditions"] = cond;
    }
    emit(out, doc);
    return kExitOk;
  }

  out << "domain: " << space_line(dom) << '\n';
  out << "codomain: " << space_line(cod) << '\n';
  out << "map: " << assignment_text(assignment) << '\n';
  out << "bijective: " << bool_text(cls.bijective) << '\n';
  for (auto c : kAllMapClasses) {
    out << field_name(c) << ": " << bool_text(cls.get(c));
    const auto v = violations(m, c);
    if (!v.empty()) {
      out << "  violated by";
      for (const auto& s : v) out << ' ' << to_string(s);
    }
    out << '\n';
  }
  if (conditions) {
    for (std::size_t i = 0; i < conditions->holds.size(); ++i) {
      out << "condition " << i + 1 << ": " << bool_text(conditions->holds[i]) << '\n';
    }
    for (const auto& s : conditions->strict) {
      out << "strict " << s.condition << " at " << to_string(s.argument) << ": " << to_string(s.smaller) << " < "
          << to_string(s.larger) << '\n';
    }
  }
  return kExitOk;
}

ordered_json failure_json(const Failure& f) {
  ordered_json out;
  out["detail"] = f.detail;
  if (f.domain) out["domain"] = to_json(*f.domain);
  if (f.codomain) out["codomain"] = to_json(*f.codomain);
  if (!f.assignment.empty()) out["map"] = assignment_json(f.assignment);
  return out;
}

double milliseconds(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

int cmd_verify(const Globals& g, const SweepOptions& options, const std::string& fixtures, bool timing,
               std::ostream& out) {
  auto reports = verify_theorems(options);
  if (!fixtures.empty()) reports.push_back(run_fixtures(fixtures, g.space_options()));
  const bool all_passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  if (g.format == Format::json) {
    ordered_json doc;
    doc["max_space_size"] = options.max_space_size;
    doc["max_map_size"] = options.max_map_size;
    doc["reports"] = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json item;
      item["id"] = r.id;
      item["statement"] = r.statement;
      item["instances"] = r.instances;
      item["checks"] = r.checks;
      item["failure_count"] = r.failure_count;
      item["failures"] = ordered_json::array();
      for (const auto& f : r.failures) item["failures"].push_back(failure_json(f));
      if (timing) item["elapsed_ms"] = milliseconds(r.elapsed);
      doc["reports"].push_back(item);
    }
    doc["passed"] = all_passed;
    emit(out, doc);
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.id << "  instances=" << r.instances << " checks=" << r.checks
          << " failures=" << r.failure_count;
      if (timing) out << " time=" << std::fixed << std::setprecision(1) << milliseconds(r.elapsed) << "ms";
      out << '\n';
      for (const auto& f : r.failures) {
        out << "    " << f.detail << '\n';
        if (f.domain) out << "      domain: " << space_line(*f.domain) << '\n';
        if (f.codomain) out << "      codomain: " << space_line(*f.codomain) << '\n';
        if (!f.assignment.empty()) out << "      map: " << assignment_text(f.assignment) << '\n';
      }
    }
    out << (all_passed ? "all " : "NOT all ") << reports.size() << " reports passed\n";
  }
  return all_passed ? kExitOk : kExitFailed;
}

int cmd_mine(const Globals& g, const std::string& implication_text, std::size_t max_domain, std::size_t max_codomain,
             unsigned workers, const std::string& expect, std::ostream& out) {
  const auto implication = parse_implication(implication_text);
  if (!implication) throw ParseError("cannot parse implication '" + implication_text + "'");
  if (!expect.empty() && expect != "witness" && expect != "none") {
    throw ParseError("--expect takes 'witness' or 'none'");
  }
  const auto witness = mine_counterexample(*implication, max_domain, max_codomain, workers, g.max_universe);

  if (g.format == Format::json) {
    ordered_json doc;
    doc["implication"] = to_string(*implication);
    doc["max_domain"] = max_domain;
    doc["max_codomain"] = max_codomain;
    if (witness) {
      ordered_json w;
      w["domain"] = to_json(witness->domain);
      w["codomain"] = to_json(witness->codomain);
      w["map"] = assignment_json(witness->assignment);
      w["classification"] = classification_json(witness->classification);
      doc["witness"] = w;
    } else {
      doc["witness"] = nullptr;
    }
    emit(out, doc);
  } else {
    out << "implication: " << to_string(*implication) << '\n';
    if (witness) {
      out << "witness:\n";
      out << "  domain: " << space_line(witness->domain) << '\n';
      out << "  codomain: " << space_line(witness->codomain) << '\n';
      out << "  map: " << assignment_text(witness->assignment) << '\n';
      out << "  classification:";
      for (auto c : kAllMapClasses) {
        if (witness->classification.get(c)) out << ' ' << field_name(c);
      }
      out << '\n';
    } else {
      out << "none\n";
    }
  }
  if (expect == "witness" && !witness) return kExitFailed;
  if (expect == "none" && witness) return kExitFailed;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nano topology engine: approximations, h-open sets, map classes and exhaustive checks", "nanotop"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}));
  app.add_option("--max-universe", g.max_universe, "Cap on universe size for powerset scans")
      ->check(CLI::Range(std::size_t{1}, kMaxElements - 1));

  std::string path;
  auto* space = app.add_subcommand("space", "Approximations and nano topology of a space file");
  bool with_h = false;
  space->add_option("file", path, "Space file")->required();
  space->add_flag("--h-family", with_h, "Also list every nano h-open set");

  auto* set = app.add_subcommand("set", "Interior/closure operators of one subset");
  std::string set_text;
  std::vector<std::string> ops;
  set->add_option("file", path, "Space file")->required();
  set->add_option("set", set_text, "Comma-separated labels, e.g. b,c (empty for {})")->required();
  set->add_option("--ops", ops, "Operations: nint,ncl,ninth,nclh,is-hopen,is-hclosed (default: all)")->delimiter(',');

  auto* map = app.add_subcommand("map", "Classify a map file");
  bool with_conditions = false;
  map->add_option("file", path, "Map file")->required();
  map->add_flag("--conditions", with_conditions, "Evaluate the five h-continuity characterizations");

  auto* verify = app.add_subcommand("verify", "Run the theorem battery over all small spaces and maps");
  SweepOptions sweep;
  std::string fixtures;
  bool timing = false;
  verify->add_option("--max-space-size", sweep.max_space_size, "Largest universe for set-level theorems");
  verify->add_option("--max-map-size", sweep.max_map_size, "Largest domain/codomain for map-level theorems");
  verify->add_option("--workers", sweep.workers, "Worker threads");
  verify->add_option("--fixtures", fixtures, "Also replay the example fixtures in this directory");
  verify->add_flag("--timing", timing, "Include elapsed times (output is then not reproducible)");

  auto* mine = app.add_subcommand("mine", "Search for a map refuting an implication between map classes");
  std::string implication;
  std::size_t max_domain = 3;
  std::size_t max_codomain = 3;
  unsigned mine_workers = 1;
  std::string expect;
  mine->add_option("implication", implication, "e.g. h-continuous=>continuous")->required();
  mine->add_option("max_domain", max_domain, "Largest domain size");
  mine->add_option("max_codomain", max_codomain, "Largest codomain size");
  mine->add_option("--workers", mine_workers, "Worker threads");
  mine->add_option("--expect", expect, "Exit 1 unless the outcome is 'witness' or 'none'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*space) return cmd_space(g, path, with_h, out);
    if (*set) return cmd_set(g, path, set_text, ops, out);
    if (*map) return cmd_map(g, path, with_conditions, out);
    if (*verify) {
      sweep.max_universe = g.max_universe;
      return cmd_verify(g, sweep, fixtures, timing, out);
    }
    if (*mine) return cmd_mine(g, implication, max_domain, max_codomain, mine_workers, expect, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("nanotop");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nano

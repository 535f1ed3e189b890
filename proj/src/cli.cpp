#include "qbmap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qbmap/bdg.hpp"
#include "qbmap/canonical.hpp"
#include "qbmap/counting.hpp"
#include "qbmap/enumerate.hpp"
#include "qbmap/lab.hpp"
#include "qbmap/metrics.hpp"
#include "qbmap/sampler.hpp"
#include "qbmap/saw.hpp"
#include "qbmap/serialize.hpp"
#include "qbmap/version.hpp"

namespace qbmap::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 1;
  int sigma = 1;
  std::uint64_t seed = 1;
  int reps = 1;
  bool encoding = false;
  std::string in_path;
  std::string out_path;
  std::string kind = "Q";
  bool dump = false;
  std::string suite;
  bool exhaustive = false;
  int sources = 10;
  int targets = 100;
  std::string experiment;
  std::string n_list;
  std::string sigma_rule = "sqrt:1";
  std::string csv_path;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int grid = 1024;
  int centers = 10;
};

Json read_json(const Options& o, std::istream& in) {
  try {
    if (o.in_path.empty() || o.in_path == "-") return Json::parse(in);
    std::ifstream f(o.in_path);
    if (!f) throw UsageError("cannot open " + o.in_path);
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
}

void write_text(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty() || o.out_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw UsageError("cannot write " + o.out_path);
  f << text;
}

Json config_json(const std::string& verb, const Options& o) {
  return Json{{"verb", verb},   {"n", o.n},         {"sigma", o.sigma},
              {"seed", o.seed}, {"reps", o.reps},   {"threads", o.threads},
              {"version", version_tag()}, {"rng", Rng::kIdentifier}};
}

int do_sample(const Options& o, std::ostream& out) {
  std::ostringstream os;
  for (int r = 0; r < o.reps; ++r) {
    Rng rng(Seed{o.seed, static_cast<std::uint64_t>(r)});
    const ForestBridge fb = sample_encoding(o.n, o.sigma, rng);
    if (o.encoding) os << forest_bridge_to_json(fb).dump() << "\n";
    else os << map_to_json(bdg_forward(fb.forest, fb.bridge)).dump() << "\n";
  }
  write_text(o, out, os.str());
  return kOk;
}

struct Tally {
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      if (failed == 0) first_failure = what;
      ++failed;
    }
  }
};

bool roundtrip_ok(const WellLabeledForest& f, const Bridge& b) {
  const PointedBoundaryMap pm = bdg_forward(f, b);
  const ForestBridge back = bdg_inverse(pm);
  return back.forest == f && back.bridge == b && bdg_forward(back.forest, back.bridge) == pm;
}

bool saw_ok(const BoundaryMap& q) {
  const SawConfiguration cfg = quadrangulation_to_saw(q);
  if (cfg.sigma() != q.sigma() || cfg.n() != q.n()) return false;
  const BoundaryMap back = saw_to_quadrangulation(cfg);
  return back == q && quadrangulation_to_saw(back) == cfg;
}

bool labels_ok(const ForestBridge& fb) {
  const PointedBoundaryMap pm = bdg_forward(fb.forest, fb.bridge);
  const auto dist = map_distances(pm.map, pm.pointed);
  const auto lt = shifted_labels(fb.forest, fb.bridge).normalized();
  const auto facial = facial_sequence(fb.forest.shape());
  for (std::size_t i = 0; i < lt.size(); ++i)
    if (dist[static_cast<std::size_t>(facial[i])] != lt[i]) return false;
  return true;
}

int do_verify(const Options& o, std::ostream& out) {
  Tally tally;
  Json extra = Json::object();
  const auto& s = o.suite;
  if ((o.exhaustive || s == "counts") && 2 * o.n + o.sigma > (s == "roundtrip" || s == "labels" ? kMaxForestSize : kMaxQuadrangulationSize))
    throw UsageError("size above the enumeration cap");
  auto each_random = [&](const std::function<void(Rng&, int)>& fn) {
    for (int r = 0; r < o.reps; ++r) {
      Rng rng(Seed{o.seed, static_cast<std::uint64_t>(r)});
      fn(rng, r);
    }
  };
  if (s == "roundtrip" || s == "labels") {
    auto check = [&](const WellLabeledForest& f, const Bridge& b, const std::string& tag) {
      const bool ok = s == "roundtrip" ? roundtrip_ok(f, b) : labels_ok(ForestBridge{f, b});
      tally.record(ok, tag);
    };
    if (o.exhaustive) {
      const auto bridges = enumerate_bridges(o.sigma);
      std::int64_t k = 0;
      for_each_forest(o.n, o.sigma, [&](const WellLabeledForest& f) {
        for (const Bridge& b : bridges) check(f, b, "instance " + std::to_string(k++));
      });
    } else {
      each_random([&](Rng& rng, int r) {
        const ForestBridge fb = sample_encoding(o.n, o.sigma, rng);
        check(fb.forest, fb.bridge, "replica " + std::to_string(r));
      });
    }
  } else if (s == "saw") {
    if (o.exhaustive) {
      for (const auto& e : enumerate_quadrangulations(o.n, o.sigma)) tally.record(saw_ok(e.map), "enumerated map");
    } else {
      each_random([&](Rng& rng, int r) {
        tally.record(saw_ok(sample_quadrangulation(o.n, o.sigma, rng).map), "replica " + std::to_string(r));
      });
    }
  } else if (s == "bounds") {
    std::int64_t pairs = 0;
    int worst_up = std::numeric_limits<int>::min(), worst_low = std::numeric_limits<int>::min();
    each_random([&](Rng& rng, int r) {
      const ForestBridge fb = sample_encoding(o.n, o.sigma, rng);
      const auto [up, low] = check_distance_bounds(bdg_forward(fb.forest, fb.bridge), fb, rng, o.sources, o.targets);
      pairs += up.pairs;
      worst_up = std::max(worst_up, up.max_violation);
      worst_low = std::max(worst_low, low.max_violation);
      tally.record(up.violations == 0 && low.violations == 0, "replica " + std::to_string(r));
    });
    extra = Json{{"pairs", pairs}, {"max_upper_violation", worst_up}, {"max_lower_violation", worst_low}};
  } else if (s == "counts") {
    const auto nf = static_cast<std::int64_t>(enumerate_forests(o.n, o.sigma).size());
    const auto nb = static_cast<std::int64_t>(enumerate_bridges(o.sigma).size());
    const auto qs = enumerate_quadrangulations(o.n, o.sigma);
    tally.record(BigInt(nf) == count_forests(o.n, o.sigma), "forest count");
    tally.record(BigInt(nb) == count_bridges(o.sigma), "bridge count");
    tally.record(BigInt(qs.size()) == count_quadrangulations(o.n, o.sigma), "quadrangulation count");
    bool mult = true;
    for (const auto& e : qs) mult = mult && e.multiplicity == o.n + o.sigma + 1;
    tally.record(mult, "pointed multiplicity");
    extra = Json{{"forests", nf}, {"bridges", nb}, {"quadrangulations", qs.size()}};
  } else {
    throw UsageError("unknown verify suite: " + s);
  }
  Json report{{"suite", s},
              {"exhaustive", o.exhaustive},
              {"config", config_json("verify", o)},
              {"checked", tally.checked},
              {"failed", tally.failed},
              {"status", tally.failed == 0 ? "ok" : "FAILED"}};
  if (tally.failed) report["first_failure"] = tally.first_failure;
  if (!extra.empty()) report["details"] = extra;
  write_text(o, out, report.dump() + "\n");
  return tally.failed == 0 ? kOk : kVerificationFailure;
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (o.kind.size() != 1 || std::string("FBQ").find(o.kind) == std::string::npos)
    throw UsageError("--kind must be F, B or Q");
  const int size = 2 * o.n + o.sigma;
  const bool in_cap = o.kind == "B"   ? o.sigma <= kMaxBridgeSigma
                      : o.kind == "F" ? size <= kMaxForestSize
                                      : size <= kMaxQuadrangulationSize;
  if (!in_cap) throw UsageError("size above the enumeration cap for kind " + o.kind);
  std::ostringstream os;
  std::int64_t count = 0;
  switch (o.kind[0]) {
    case 'F':
      for_each_forest(o.n, o.sigma, [&](const WellLabeledForest& f) {
        ++count;
        if (o.dump) {
          Json j = forest_bridge_to_json(ForestBridge{f, Bridge::zero(o.sigma)});
          j.erase("bridge");
          os << j.dump() << "\n";
        }
      });
      break;
    case 'B':
      for_each_bridge(o.sigma, [&](const Bridge& b) {
        ++count;
        if (o.dump) os << Json(std::vector<int>(b.values().begin(), b.values().end())).dump() << "\n";
      });
      break;
    case 'Q':
      for (const auto& e : enumerate_quadrangulations(o.n, o.sigma)) {
        ++count;
        if (o.dump) {
          Json j = map_to_json(e.map);
          j["multiplicity"] = e.multiplicity;
          os << j.dump() << "\n";
        }
      }
      break;
  }
  os << count << "\n";
  write_text(o, out, os.str());
  return BigInt(count) == count_formula(o.kind[0], o.n, o.sigma) ? kOk : kVerificationFailure;
}

std::vector<int> parse_n_list(const std::string& text, int fallback) {
  if (text.empty()) return {fallback};
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const double v = std::stod(item);
      if (v < 0 || v > 2e9) throw std::out_of_range("n");
      out.push_back(static_cast<int>(v));
    } catch (const std::exception&) {
      throw UsageError("bad --n entry: " + item);
    }
  }
  return out;
}

int do_experiment(const Options& o, std::ostream& out) {
  ExperimentConfig cfg;
  cfg.name = o.experiment;
  cfg.n = parse_n_list(o.n_list, o.n);
  try {
    cfg.sigma_rule = SigmaRule::parse(o.sigma_rule);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  cfg.replicas = o.reps;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.grid_points = o.grid;
  cfg.centers = o.centers;
  cfg.sources = o.sources;
  cfg.targets = o.targets;
  const auto names = experiment_names();
  if (std::find(names.begin(), names.end(), cfg.name) == names.end())
    throw UsageError("unknown experiment: " + cfg.name);
  const ExperimentResult res = run_experiment(cfg);
  write_text(o, out, res.to_json().dump(2) + "\n");
  if (!o.csv_path.empty()) {
    std::ofstream f(o.csv_path);
    if (!f) throw UsageError("cannot write " + o.csv_path);
    f << res.to_csv();
  }
  return res.passed() ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sampling, bijections and scaling experiments for quadrangulations with a boundary", "qbmap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_tag());
  Options o;

  auto size_opts = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of internal faces")->check(CLI::NonNegativeNumber);
    sub->add_option("--sigma", o.sigma, "Boundary half-length")->check(CLI::PositiveNumber);
  };
  auto seed_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Master seed");
    sub->add_option("--reps", o.reps, "Replicas")->check(CLI::PositiveNumber);
  };
  auto io_opts = [&](CLI::App* sub) {
    sub->add_option("--in", o.in_path, "Input file (default stdin)");
    sub->add_option("--out", o.out_path, "Output file (default stdout)");
  };

  auto* sample = app.add_subcommand("sample", "Sample uniform pointed quadrangulations as JSON lines");
  size_opts(sample);
  seed_opts(sample);
  io_opts(sample);
  sample->add_flag("--encoding", o.encoding, "Emit forest and bridge instead of the map");

  auto* encode = app.add_subcommand("encode", "Pointed map JSON to forest and bridge");
  io_opts(encode);
  auto* decode = app.add_subcommand("decode", "Forest and bridge JSON to pointed map");
  io_opts(decode);
  auto* saw_enc = app.add_subcommand("saw-encode", "Map JSON to walk configuration");
  io_opts(saw_enc);
  auto* saw_dec = app.add_subcommand("saw-decode", "Walk configuration JSON to map");
  io_opts(saw_dec);

  auto* enumerate = app.add_subcommand("enumerate", "Count objects by exhaustive enumeration");
  size_opts(enumerate);
  io_opts(enumerate);
  enumerate->add_option("--kind", o.kind, "F (forests), B (bridges) or Q (quadrangulations)");
  enumerate->add_flag("--dump", o.dump, "Print every object before the count");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "roundtrip | saw | labels | bounds | counts")->required();
  size_opts(verify);
  seed_opts(verify);
  io_opts(verify);
  verify->add_flag("--exhaustive", o.exhaustive, "Enumerate instead of sampling");
  verify->add_option("--sources", o.sources, "BFS sources per map (bounds)")->check(CLI::PositiveNumber);
  verify->add_option("--targets", o.targets, "Targets per source (bounds)")->check(CLI::PositiveNumber);

  auto* experiment = app.add_subcommand("experiment", "Run a scaling experiment");
  experiment->add_option("name", o.experiment, "bridge-variance | dimension | sigma-zero | sigma-infinity | excursion")
      ->required();
  experiment->add_option("--n", o.n_list, "Comma-separated sizes");
  experiment->add_option("--sigma-rule", o.sigma_rule, "sqrt[:f] | quarter | three-quarter | fixed:k");
  seed_opts(experiment);
  experiment->add_option("--out", o.out_path, "JSON result file (default stdout)");
  experiment->add_option("--csv", o.csv_path, "CSV table file");
  experiment->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  experiment->add_option("--grid", o.grid, "Grid points on [0, 1]")->check(CLI::PositiveNumber);
  experiment->add_option("--centers", o.centers, "BFS centers per map")->check(CLI::PositiveNumber);
  experiment->add_option("--sources", o.sources, "BFS sources per map")->check(CLI::PositiveNumber);
  experiment->add_option("--targets", o.targets, "Targets per source")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*sample) return do_sample(o, out);
    if (*encode) {
      const PointedBoundaryMap pm = pointed_map_from_json(read_json(o, in));
      write_text(o, out, forest_bridge_to_json(bdg_inverse(pm)).dump() + "\n");
      return kOk;
    }
    if (*decode) {
      const ForestBridge fb = forest_bridge_from_json(read_json(o, in));
      write_text(o, out, map_to_json(bdg_forward(fb.forest, fb.bridge)).dump() + "\n");
      return kOk;
    }
    if (*saw_enc) {
      write_text(o, out, saw_to_json(quadrangulation_to_saw(map_from_json(read_json(o, in)))).dump() + "\n");
      return kOk;
    }
    if (*saw_dec) {
      write_text(o, out, map_to_json(saw_to_quadrangulation(saw_from_json(read_json(o, in)))).dump() + "\n");
      return kOk;
    }
    if (*enumerate) return do_enumerate(o, out);
    if (*verify) return do_verify(o, out);
    if (*experiment) return do_experiment(o, out);
  } catch (const UsageError& e) {
    err << "qbmap: " << e.what() << "\n";
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "qbmap: invalid input: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "qbmap: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace qbmap::cli

#include "chhs/cli.hpp"

#include <omp.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "chhs/errors.hpp"
#include "chhs/generators.hpp"
#include "chhs/hhs_constants.hpp"
#include "chhs/instance_io.hpp"
#include "chhs/report.hpp"
#include "chhs/thm_a.hpp"
#include "chhs/verifier.hpp"

namespace chhs {
namespace {

struct Flags {
  std::string input;
  std::string output;
  std::string format = "json";
  std::size_t delta_cap = kDefaultDeltaCap;
  std::size_t vertex_cap = 64;
  std::uint64_t seed = 1;
  std::vector<Dist> thresholds{2, 3, 4};
  std::vector<Dist> kappa_grid{0, 1, 2, 3, 4};
  int threads = 0;
  std::string kind;
  std::size_t size = 4;
  double prob = 0.5;
  int radius = 2;
  std::string w_rule = "none";
};

std::string read_input(const Flags& f, const std::string& stdin_text) {
  if (f.input.empty() || f.input == "-") return stdin_text;
  std::ifstream in(f.input, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + f.input);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Json wrap(const std::string& command, Json result) {
  Json doc;
  doc["header"] = report_header(command);
  doc["result"] = std::move(result);
  return doc;
}

struct Outcome {
  int code = 0;
  std::string text;
};

Outcome generate(const Flags& f) {
  const WRule rule = parse_w_rule(f.w_rule);
  FlagComplex x;
  std::optional<XGraph> w;
  if (f.kind == "path") {
    x = gen_path(f.size);
  } else if (f.kind == "cycle") {
    x = gen_cycle(f.size);
  } else if (f.kind == "octahedron") {
    x = gen_octahedron(f.size);
  } else if (f.kind == "random_flag") {
    x = gen_random_flag(f.size, f.prob, f.seed);
  } else if (f.kind == "join") {
    x = join(gen_discrete(f.size, "u"), gen_discrete(f.size, "v"));
  } else if (f.kind == "amalgam") {
    Amalgam a = gen_amalgam(s3_amalgam_spec(f.radius));
    x = std::move(a.x);
    w = std::move(a.w);
  } else if (f.kind == "blowup") {
    BlowupSpec spec;
    spec.base_vertices = {"alpha", "gamma"};
    spec.base_edges = {{"alpha", "gamma"}};
    for (const std::string& base : spec.base_vertices) {
      for (std::size_t i = 1; i <= f.size; ++i) spec.blobs[base].push_back(base + "_" + std::to_string(i));
    }
    x = gen_blowup(spec).x;
  } else {
    throw Error(ErrorKind::BadParameters, "unknown generator " + f.kind);
  }
  if (!w || f.w_rule != "none") w = apply_w_rule(x, rule);
  return {0, emit_instance(x, *w)};
}

Outcome execute(const std::string& command, const Flags& f, const std::string& stdin_text) {
  if (command == "gen") return generate(f);
  ParsedInstance parsed = parse_instance(read_input(f, stdin_text));
  const Instance inst(std::move(parsed.x), std::move(parsed.w));
  const FlagComplex& x = inst.complex();

  if (command == "inspect") return {0, render(wrap(command, inspect_json(inst)), f.format)};
  if (command == "verify-chhs") {
    VerifyOptions options;
    options.delta_cap = f.delta_cap;
    options.diagnostic_vertex_cap = f.vertex_cap;
    const VerificationReport r = verify_chhs(inst, options);
    return {r.pass ? 0 : 1, render(wrap(command, verification_json(inst, r)), f.format)};
  }
  if (command == "verify-thm-a") {
    LinkEdgeMap extra;
    if (parsed.link_edges) extra = resolve_link_edges(inst, *parsed.link_edges);
    const ThmAReport r = check_thm_a_conditions(x, inst.index(), extra);
    return {r.pass() ? 0 : 1, render(wrap(command, thm_a_json(inst, r)), f.format)};
  }
  if (command == "build-w") {
    LinkEdgeMap assignments;
    if (parsed.link_edges) assignments = resolve_link_edges(inst, *parsed.link_edges);
    const XGraph w = build_w_from_link_edges(x, inst.index(), assignments, parsed.action.value_or(std::vector<Permutation>{}));
    return {0, emit_instance(x, w, parsed.action, parsed.link_edges)};
  }
  if (command == "check-action") {
    if (!parsed.action) throw Error(ErrorKind::ParseError, "document has no \"action\"");
    const ActionReport r = check_action(inst, *parsed.action);
    return {r.pass ? 0 : 1, render(wrap(command, action_json(inst, r)), f.format)};
  }

  const ProjectionSystem ps(inst);
  if (command == "projections") return {0, render(wrap(command, projections_json(ps)), f.format)};
  if (command == "constants") {
    ConstantsOptions options;
    options.kappa_grid = f.kappa_grid;
    options.seed = f.seed;
    return {0, render(wrap(command, constants_json(hhs_constants(ps, options))), f.format)};
  }
  if (command == "distance-formula") {
    const PairDistances pd = pair_distances(ps);
    Json result;
    result["fits"] = fits_json(distance_formula_fit(pd, f.thresholds));
    const std::uint64_t seed = f.seed;
    const std::size_t pairs = pd.pairs.size();
    const Perturbation h = [seed, pairs](std::size_t c, std::size_t i, Dist d) -> Dist {
      if (d == kInfDist) return d;
      return d + static_cast<Dist>(mix(seed ^ mix(c * (pairs + 1) + i)) & 1U);
    };
    result["perturbed"] = {{"lambda", rational_json(Rational(2))},
                           {"rule", "coordinate distance plus a seeded value in {0,1}"},
                           {"fits", fits_json(distance_formula_fit(pd, f.thresholds, h, Rational(2)))}};
    return {0, render(wrap(command, result), f.format)};
  }
  if (command == "realize") {
    Json result;
    if (parsed.tuple) {
      Tuple t;
      t.coords.assign(ps.class_count(), x.none());
      for (const auto& [simplex, coords] : *parsed.tuple) t.coords[inst.class_of(simplex)] |= coords;
      result["realization"] = realization_json(ps, realize_tuple(ps, t));
    } else {
      Dist worst = 0;
      for (std::size_t w = 0; w < ps.w_count(); ++w) worst = std::max(worst, realize_tuple(ps, coordinate_tuple(ps, w)).theta);
      result["true_tuples"] = {{"count", ps.w_count()}, {"max_theta", dist_json(worst)}};
      Json synthetic = Json::array();
      std::mt19937_64 engine(f.seed);
      for (int i = 0; i < 8 && ps.w_count() > 0; ++i) {
        const std::size_t a = engine() % ps.w_count();
        const std::size_t b = engine() % ps.w_count();
        Tuple t = coordinate_tuple(ps, a);
        for (std::size_t c = 0; c < ps.class_count(); ++c) {
          if (engine() >> 63) t.coords[c] = ps.pi(c, b);
        }
        Json k = realization_json(ps, realize_tuple(ps, t));
        k["mixed_from"] = Json::array({x.key(x.maximal_sets()[a]), x.key(x.maximal_sets()[b])});
        synthetic.push_back(k);
      }
      result["synthetic"] = synthetic;
    }
    return {0, render(wrap(command, result), f.format)};
  }
  throw Error(ErrorKind::BadParameters, "unknown command " + command);
}

}  // namespace

CliResult run(const std::vector<std::string>& args, const std::string& stdin_text) {
  CliResult result;
  Flags f;
  CLI::App app{"Combinatorial HHS verifier", "chhs"};
  app.require_subcommand(1);
  const std::vector<std::string> commands{"inspect",   "verify-chhs", "verify-thm-a",     "build-w", "projections",
                                          "constants", "realize",     "distance-formula", "gen",     "check-action"};
  std::string thresholds_text;
  std::string kappa_text;
  for (const std::string& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", f.input, "instance document (stdin when omitted)");
    sub->add_option("--output", f.output, "report path (stdout when omitted)");
    sub->add_option("--format", f.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--delta-cap", f.delta_cap, "largest graph handed to the four-point kernel");
    sub->add_option("--vertex-cap", f.vertex_cap, "largest Y-space for diagnostics");
    sub->add_option("--seed", f.seed);
    sub->add_option("--thresholds", thresholds_text, "comma-separated distance-formula thresholds");
    sub->add_option("--kappa-grid", kappa_text, "comma-separated uniqueness slacks");
    sub->add_option("--threads", f.threads, "OpenMP thread count");
    if (name == "gen") {
      sub->add_option("kind", f.kind)
          ->required()
          ->check(CLI::IsMember({"path", "cycle", "octahedron", "random_flag", "join", "amalgam", "blowup"}));
      sub->add_option("--size", f.size);
      sub->add_option("--prob", f.prob);
      sub->add_option("--radius", f.radius);
      sub->add_option("--w-rule", f.w_rule)->check(CLI::IsMember({"none", "complete", "shared_codim1_face"}));
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string(e.what()) + "\n";
    return result;
  }
  std::string command;
  for (const CLI::App* sub : app.get_subcommands()) command = sub->get_name();

  auto parse_list = [](const std::string& text, std::vector<Dist>& out) {
    if (text.empty()) return;
    out.clear();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const long v = std::stol(item, &used);
        if (used != item.size() || v < 0) throw std::invalid_argument(item);
        out.push_back(static_cast<Dist>(v));
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadParameters, "bad list entry \"" + item + "\"");
      }
    }
  };
  try {
    parse_list(thresholds_text, f.thresholds);
    parse_list(kappa_text, f.kappa_grid);
    if (f.threads > 0) omp_set_num_threads(f.threads);
    Outcome o = execute(command, f, stdin_text);
    result.exit_code = o.code;
    if (f.output.empty()) {
      result.out = std::move(o.text);
    } else {
      std::ofstream out(f.output, std::ios::binary);
      if (!out) throw Error(ErrorKind::ParseError, "cannot write " + f.output);
      out << o.text;
    }
  } catch (const Error& e) {
    result.exit_code = 2;
    result.err = std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.err = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace chhs

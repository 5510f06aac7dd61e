#include "latred/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "latred/generate.hpp"
#include "latred/io.hpp"
#include "latred/iwasawa.hpp"
#include "latred/octonion.hpp"
#include "latred/reduce.hpp"
#include "latred/size_reduce.hpp"

namespace latred {

namespace {

struct JobSpec {
  std::string group = "sl";
  int g = 2;
  double delta = 0.75;
  long max_iter = -1;
  int reortho_every = 32;
  double tol = 1e-6;
  unsigned long long seed = 1;
  bool trace = false;
  bool specialized = false;
  std::string input = "-";
  // gen knobs
  int word = 8;
  double spread = 0.75;
};

Json read_input(const JobSpec& spec, std::istream& in) {
  if (spec.input == "-") {
    Json j;
    in >> j;
    return j;
  }
  return load_json_file(spec.input);
}

void apply_document_fields(JobSpec& spec, const Json& doc, const CLI::App& cmd) {
  // file fields act as defaults; explicit flags win
  if (doc.contains("group") && cmd.count("--group") == 0) spec.group = doc["group"].get<std::string>();
  if (doc.contains("g") && cmd.count("--g") == 0) spec.g = doc["g"].get<int>();
  if (doc.contains("delta") && cmd.count("--delta") == 0) spec.delta = doc["delta"].get<double>();
}

GroupDescriptor descriptor_of(const JobSpec& spec) {
  return make_group_descriptor(parse_group_kind(spec.group), spec.g);
}

Json trace_to_json(const GroupDescriptor& desc, const std::vector<TraceStep>& trace) {
  Json arr = Json::array();
  for (const auto& step : trace) {
    Json e;
    switch (step.kind) {
      case StepKind::SizeReduce: e["kind"] = "red"; break;
      case StepKind::Reflect: e["kind"] = "refl"; break;
      case StepKind::Recompute: e["kind"] = "recompute"; break;
    }
    e["root"] = step.kind == StepKind::Recompute ? "" : to_string(desc.positive[step.root].label);
    e["value"] = step.value;
    e["sigma"] = step.sigma_after;
    arr.push_back(std::move(e));
  }
  return arr;
}

bool classical_member(const GroupDescriptor& desc, const RationalMatrix& gamma) {
  if (desc.form_exact) {
    const RationalMatrix& s = *desc.form_exact;
    return RationalMatrix(gamma.transpose() * s * gamma) == s;
  }
  // SL: integral with determinant 1
  return rational_det(gamma) == Rational(1);
}

bool group_member(const GroupDescriptor& desc, const RationalMatrix& gamma) {
  for (Eigen::Index i = 0; i < gamma.rows(); ++i)
    for (Eigen::Index j = 0; j < gamma.cols(); ++j)
      if (!is_integer(gamma(i, j))) return false;
  if (desc.kind == GroupKind::G2) return is_g2_element(gamma);
  return classical_member(desc, gamma);
}

int cmd_reduce(const JobSpec& spec, const CLI::App& cmd, std::istream& in, std::ostream& out,
               std::ostream& err) {
  JobSpec s = spec;
  const Json doc = read_input(s, in);
  apply_document_fields(s, doc, cmd);
  if (!doc.contains("H")) throw ParseError("reduce: input document needs an \"H\" matrix");

  const GroupDescriptor desc = descriptor_of(s);
  const RealMatrix H = load_real_matrix(doc["H"]);

  ReduceOptions opts;
  opts.delta = s.delta;
  opts.max_reflections = s.max_iter;
  opts.recompute_every = s.reortho_every;
  opts.tol = s.tol;
  opts.record_size_reduction = s.trace;
  opts.specialized_driver = s.specialized;

  const ReduceResult res = reduce(desc, H, opts);

  Json outdoc;
  outdoc["group"] = s.group;
  outdoc["g"] = desc.g;
  outdoc["delta"] = s.delta;
  outdoc["H"] = real_matrix_to_json(H);
  outdoc["gamma"] = rational_matrix_to_json(res.gamma);
  outdoc["a"] = real_vector_to_json(res.point.a);
  outdoc["n"] = real_matrix_to_json(res.point.n);
  outdoc["reduced_H"] = real_matrix_to_json(gram_of(res.point));
  outdoc["reflections"] = res.reflections;
  outdoc["reduced"] = is_reduced(desc, s.delta, res.point.a, res.point.n);
  outdoc["equivariance_error"] = res.equivariance_error;
  if (s.trace) outdoc["trace"] = trace_to_json(desc, res.trace);
  out << outdoc.dump(2) << "\n";
  (void)err;
  return 0;
}

int cmd_decompose(const JobSpec& spec, const CLI::App& cmd, std::istream& in, std::ostream& out) {
  JobSpec s = spec;
  const Json doc = read_input(s, in);
  apply_document_fields(s, doc, cmd);
  if (!doc.contains("H")) throw ParseError("decompose: input document needs an \"H\" matrix");
  const GroupDescriptor desc = descriptor_of(s);
  const RealMatrix H = load_real_matrix(doc["H"]);
  const IwasawaPair p = restore_compatible(desc, H, s.tol);
  const RealMatrix restored = gram_of(p);

  Json outdoc;
  outdoc["group"] = s.group;
  outdoc["g"] = desc.g;
  outdoc["a"] = real_vector_to_json(p.a);
  outdoc["n"] = real_matrix_to_json(p.n);
  outdoc["restored_H"] = real_matrix_to_json(restored);
  outdoc["restoration_error"] = max_abs(RealMatrix(restored - H)) / std::max(1.0, max_abs(H));
  out << outdoc.dump(2) << "\n";
  return 0;
}

int cmd_verify(const JobSpec& spec, const CLI::App& cmd, std::istream& in, std::ostream& out) {
  JobSpec s = spec;
  const Json doc = read_input(s, in);
  apply_document_fields(s, doc, cmd);
  const GroupDescriptor desc = descriptor_of(s);

  Json outdoc;
  outdoc["group"] = s.group;
  outdoc["g"] = desc.g;

  if (doc.contains("H")) {
    const RealMatrix H = load_real_matrix(doc["H"]);
    const bool compatible = check_compatible(desc, H, s.tol);
    outdoc["compatible"] = compatible;
    if (compatible) {
      const IwasawaPair p = restore_compatible(desc, H, s.tol);
      Json omega = Json::array();
      for (int k = 0; k < desc.root_count(); ++k) {
        const double t = marker_coordinate(desc, k, p.n);
        Json e;
        e["root"] = to_string(desc.positive[k].label);
        e["coordinate"] = t;
        e["ok"] = t >= -0.5 && t < 0.5;
        omega.push_back(std::move(e));
      }
      outdoc["omega"] = std::move(omega);
      Json lov = Json::array();
      for (int k = 0; k < desc.rank; ++k) {
        const double t = p_alpha(desc, k, p.n);
        const double lhs = char_eval(desc, k, p.a);
        Json e;
        e["root"] = to_string(desc.positive[k].label);
        e["alpha_sq"] = lhs * lhs;
        e["bound"] = 1.0 / (s.delta - t * t);
        e["ok"] = lhs * lhs <= 1.0 / (s.delta - t * t);
        lov.push_back(std::move(e));
      }
      outdoc["lovasz"] = std::move(lov);
      outdoc["reduced"] = is_reduced(desc, s.delta, p.a, p.n);
    }
  }
  if (doc.contains("gamma")) {
    const RealMatrix graw = load_real_matrix(doc["gamma"]);
    const auto snapped = snap_to_integers(graw, 1e-6);
    outdoc["member"] = snapped.has_value() && group_member(desc, *snapped);
  }
  out << outdoc.dump(2) << "\n";
  return 0;
}

int cmd_gen(const JobSpec& spec, std::ostream& out) {
  const GroupDescriptor desc = descriptor_of(spec);
  const RealMatrix H =
      generate_compatible_gram(desc, {.seed = spec.seed, .word = spec.word, .spread = spec.spread});
  Json outdoc;
  outdoc["group"] = spec.group;
  outdoc["g"] = desc.g;
  outdoc["delta"] = spec.delta;
  outdoc["seed"] = spec.seed;
  outdoc["H"] = real_matrix_to_json(H);
  out << outdoc.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"lattice reduction over split semisimple groups"};
  app.require_subcommand(1);

  JobSpec spec;
  auto add_common = [&](CLI::App* cmd, bool with_input) {
    cmd->add_option("--group", spec.group, "engine: sl, sp, so, g2")
        ->check(CLI::IsMember({"sl", "sp", "so", "g2"}));
    cmd->add_option("--g", spec.g, "rank parameter (ignored for g2)");
    cmd->add_option("--delta", spec.delta, "reduction quality in (1/4, 1)");
    cmd->add_option("--tol", spec.tol, "compatibility tolerance");
    if (with_input) cmd->add_option("--input,-i", spec.input, "job file, or - for stdin");
  };

  CLI::App* red = app.add_subcommand("reduce", "reduce a Gram matrix");
  add_common(red, true);
  red->add_option("--max-iter", spec.max_iter, "reflection cap (-1: automatic)");
  red->add_option("--reortho-every", spec.reortho_every, "refresh coordinates this often");
  red->add_flag("--trace", spec.trace, "record size-reduction steps in the trace");
  red->add_flag("--specialized", spec.specialized, "use the per-group step schedule");

  CLI::App* dec = app.add_subcommand("decompose", "Iwasawa coordinates of a Gram matrix");
  add_common(dec, true);

  CLI::App* ver = app.add_subcommand("verify", "check compatibility, reducedness, membership");
  add_common(ver, true);

  CLI::App* gen = app.add_subcommand("gen", "generate a random compatible Gram matrix");
  add_common(gen, false);
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--word", spec.word, "length of the integral scrambling word");
  gen->add_option("--spread", spec.spread, "log-scale of the random torus part");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (red->parsed()) return cmd_reduce(spec, *red, in, out, err);
    if (dec->parsed()) return cmd_decompose(spec, *dec, in, out);
    if (ver->parsed()) return cmd_verify(spec, *ver, in, out);
    if (gen->parsed()) return cmd_gen(spec, out);
  } catch (const IterationLimit& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace latred

#include "cubicdio/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "cubicdio/polyexpr.hpp"
#include "cubicdio/report.hpp"

namespace cubicdio::cli {

namespace {

constexpr const char* kSignNote =
    "Families are f(x, y) = x^3 + p(y)*x + q(y). For the form x^3 - p(y)*x + q(y), pass -p.";

SearchMode parse_mode(const std::string& s) {
  if (s == "filtered") return SearchMode::Filtered;
  if (s == "exhaustive") return SearchMode::Exhaustive;
  throw Error(ErrorKind::InvalidArgument, "unknown mode '" + s + "' (filtered|exhaustive)");
}

Poly parse_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw Error(ErrorKind::ParseError, flag + " \"" + text + "\": " + e.what());
  }
}

struct RunOptions {
  SearchMode mode = SearchMode::Filtered;
  bool json = false;
  bool strict = false;
  int workers = 1;
  double tol = 1e-12;
  std::uint64_t max_trial = DivisorBudget::kDefaultMaxTrial;
};

struct InstanceTotals {
  std::size_t solutions = 0;
  bool obstructed = false;
};

// Runs one family and renders it; returns the exit code for this instance.
int run_instance(const CubicFamily& fam, std::int64_t bound, const RunOptions& opt,
                 const std::optional<std::string>& name, std::ostream& out, std::ostream& err,
                 InstanceTotals& totals) {
  SearchConfig cfg;
  cfg.bound = bound;
  cfg.mode = opt.mode;
  cfg.divisor_budget = DivisorBudget(opt.max_trial);
  cfg.strict_hypotheses = opt.strict;
  cfg.worker_count = opt.workers;
  cfg.cardano_tol = opt.tol;

  const HypothesisReport hyp = validate_hypotheses(fam, cfg.divisor_budget);
  totals.obstructed = hyp.obstruction;
  const std::string label = name ? "[" + *name + "] " : "";
  if (opt.strict && !hyp.passed()) {
    if (opt.json) {
      Json j;
      if (name) j["instance"] = *name;
      j["hypotheses"] = hypotheses_json(hyp);
      out << j.dump() << "\n";
    } else {
      if (name) out << "== " << *name << " ==\n";
      out << render_hypotheses_text(hyp);
    }
    for (const auto& v : hyp.violations()) err << label << "hypothesis violated: " << v << "\n";
    return kHypothesisViolation;
  }
  for (const auto& v : hyp.violations()) err << label << "warning: " << v << "\n";
  for (const auto& w : hyp.warnings()) err << label << "warning: " << w << "\n";

  const SearchReport report = run_search(fam, cfg);
  totals.solutions = report.solution_count;
  if (opt.json) {
    out << render_json_lines(report, name);
  } else {
    if (name) out << "== " << *name << " ==\n";
    out << render_table(report);
  }
  for (const auto& w : report.budget_warnings) {
    err << label << "budget exceeded at y0 = " << w.y0 << ": " << w.message << "\n";
  }
  return report.suppressed_candidates() ? kBudgetExhausted : kOk;
}

void add_run_options(CLI::App* cmd, RunOptions& opt, std::string& mode) {
  cmd->add_option("--mode", mode, "filtered (square -3D(y0) only) or exhaustive")
      ->check(CLI::IsMember({"filtered", "exhaustive"}));
  cmd->add_flag("--json", opt.json, "Emit JSON lines instead of a table");
  cmd->add_flag("--strict", opt.strict, "Treat hypothesis failures as errors (exit 2)");
  cmd->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", opt.tol, "Residual tolerance for the Cardano cross-check")->check(CLI::PositiveNumber);
  cmd->add_option("--max-trial", opt.max_trial, "Largest trial divisor when factoring")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceFileError(std::nullopt, "cannot open instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<Instance> load_instances(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InstanceFileError(std::nullopt, std::string("instance file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InstanceFileError(std::nullopt, "instance file must be a JSON array");

  std::vector<Instance> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& rec = doc[i];
    auto fail = [i](const std::string& msg) { return InstanceFileError(i, "record " + std::to_string(i) + ": " + msg); };
    if (!rec.is_object()) throw fail("not an object");
    for (const char* key : {"name", "p", "q"}) {
      if (!rec.contains(key) || !rec[key].is_string()) throw fail(std::string("missing string field \"") + key + "\"");
    }
    Instance inst;
    inst.name = rec["name"].get<std::string>();
    if (!names.insert(inst.name).second) throw fail("duplicate instance name \"" + inst.name + "\"");
    inst.p_text = rec["p"].get<std::string>();
    inst.q_text = rec["q"].get<std::string>();
    try {
      inst.p = parse_poly(inst.p_text);
      inst.q = parse_poly(inst.q_text);
    } catch (const ParseError& e) {
      throw fail(e.what());
    }
    if (rec.contains("bound")) {
      if (!rec["bound"].is_number_integer() || rec["bound"].get<std::int64_t>() < 1) {
        throw fail("\"bound\" must be a positive integer");
      }
      inst.bound = rec["bound"].get<std::int64_t>();
    }
    if (rec.contains("mode")) {
      if (!rec["mode"].is_string()) throw fail("\"mode\" must be a string");
      try {
        inst.mode = parse_mode(rec["mode"].get<std::string>());
      } catch (const Error& e) {
        throw fail(e.what());
      }
    }
    if (inst.p.is_zero() && inst.q.is_zero()) throw fail("p and q are both zero");
    out.push_back(std::move(inst));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer points on cubic families x^3 + p(y)*x + q(y) = 0", "cubicdio"};
  app.footer(kSignNote);
  app.require_subcommand(1);

  RunOptions opt;
  opt.workers = std::max(1, omp_get_max_threads());
  std::string mode = "filtered";
  std::string p_text, q_text;
  std::int64_t bound = 0;

  auto* solve = app.add_subcommand("solve", "Search |y0| <= bound for integer solutions");
  solve->add_option("--p", p_text, "Coefficient of x, e.g. \"3*y\"")->required();
  solve->add_option("--q", q_text, "Constant term, e.g. \"y - 1\"")->required();
  solve->add_option("--bound", bound, "Search bound B on |y0|")->required();
  add_run_options(solve, opt, mode);

  std::string file;
  std::optional<std::int64_t> default_bound;
  auto* batch = app.add_subcommand("batch", "Run every instance of a JSON instance file");
  batch->add_option("--file", file, "Instance file")->required();
  batch->add_option("--bound", default_bound, "Bound for records without one");
  add_run_options(batch, opt, mode);

  auto* check = app.add_subcommand("check", "Report hypotheses only");
  check->add_option("--p", p_text, "Coefficient of x")->required();
  check->add_option("--q", q_text, "Constant term")->required();
  check->add_flag("--json", opt.json, "Emit JSON");
  check->add_flag("--strict", opt.strict, "Exit 2 when a hypothesis fails");
  check->add_option("--max-trial", opt.max_trial, "Largest trial divisor when factoring")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));

  std::string p0_text, q0_text;
  auto* cardano = app.add_subcommand("cardano", "Evaluate the Cardano real root of x^3 + p0*x + q0");
  cardano->add_option("--p0", p0_text, "Integer p0")->required();
  cardano->add_option("--q0", q0_text, "Integer q0")->required();
  cardano->add_option("--tol", opt.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  cardano->add_flag("--json", opt.json, "Emit JSON");

  std::vector<const char*> argv{"cubicdio"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    opt.mode = parse_mode(mode);
    InstanceTotals totals;

    if (solve->parsed()) {
      if (bound < 1) throw Error(ErrorKind::InvalidBound, "--bound must be >= 1");
      const CubicFamily fam(parse_arg("--p", p_text), parse_arg("--q", q_text));
      return run_instance(fam, bound, opt, std::nullopt, out, err, totals);
    }

    if (check->parsed()) {
      const CubicFamily fam(parse_arg("--p", p_text), parse_arg("--q", q_text));
      const HypothesisReport hyp = validate_hypotheses(fam, DivisorBudget(opt.max_trial));
      if (opt.json) {
        Json j;
        j["p"] = render_poly(fam.p());
        j["q"] = render_poly(fam.q());
        j["discriminant"] = render_poly(fam.disc());
        j["hypotheses"] = hypotheses_json(hyp);
        out << j.dump() << "\n";
      } else {
        out << "f(x, y) = x^3 + (" << render_poly(fam.p()) << ")*x + (" << render_poly(fam.q()) << ")\n"
            << "D(y) = " << render_poly(fam.disc()) << "\n"
            << render_hypotheses_text(hyp);
      }
      return opt.strict && !hyp.passed() ? kHypothesisViolation : kOk;
    }

    if (cardano->parsed()) {
      Integer p0, q0;
      if (p0.set_str(p0_text, 10) != 0 || q0.set_str(q0_text, 10) != 0) {
        throw Error(ErrorKind::InvalidArgument, "--p0 and --q0 must be integers");
      }
      const auto spec = SpecializedCubic::from_coefficients(p0, q0);
      const CardanoResult res = cardano_real_root(spec, opt.tol);
      if (opt.json) {
        Json j;
        j["p0"] = integer_json(p0);
        j["q0"] = integer_json(q0);
        j["d0"] = integer_json(spec.d0);
        j["root"] = static_cast<double>(res.value);
        j["residual"] = static_cast<double>(res.residual);
        j["polished"] = res.polished;
        out << j.dump() << "\n";
      } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17Lg", res.value);
        out << "d0 = " << spec.d0 << "\nreal root = " << buf << "\n";
        std::snprintf(buf, sizeof buf, "%.3Lg", res.residual);
        out << "residual = " << buf << (res.polished ? " (Newton-polished)" : "") << "\n";
      }
      return kOk;
    }

    // batch
    const std::vector<Instance> instances = load_instances(read_file(file));
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (!instances[i].bound && !default_bound) {
        throw InstanceFileError(i, "record " + std::to_string(i) + ": no bound and no --bound default");
      }
    }
    int worst = kOk;
    std::size_t solutions = 0, obstructions = 0;
    for (const auto& inst : instances) {
      RunOptions local = opt;
      if (inst.mode) local.mode = *inst.mode;
      InstanceTotals t;
      const int code = run_instance(CubicFamily(inst.p, inst.q), inst.bound ? *inst.bound : *default_bound, local,
                                    inst.name, out, err, t);
      worst = std::max(worst, code);
      solutions += t.solutions;
      if (t.obstructed) ++obstructions;
    }
    if (opt.json) {
      Json j;
      j["batch"] = {{"instances", instances.size()}, {"solutions", solutions}, {"obstructions", obstructions}};
      out << j.dump() << "\n";
    } else {
      out << "== summary ==\ninstances " << instances.size() << ", solutions " << solutions << ", obstructed "
          << obstructions << "\n";
    }
    return worst;
  } catch (const InstanceFileError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace cubicdio::cli

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "matrix_file.hpp"
#include "robinf/identified_set.hpp"
#include "robinf/linalg.hpp"
#include "robinf/maxmin.hpp"
#include "robinf/orders.hpp"

namespace robinf::cli {
namespace {

using namespace robinf::literals;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation("check failed: " + what);
}

void require_same_states(const Experiment& e, const Experiment& e_prime, const std::string& a,
                         const std::string& b) {
  if (e.states() != e_prime.states()) {
    throw DimensionError(a + " has " + std::to_string(e.states()) + " states but " + b + " has " +
                         std::to_string(e_prime.states()));
  }
}

VerdictReport direction_report(const Experiment& e, const Experiment& e_prime) {
  const ComparisonVerdict v = robustly_more_informative(e, e_prime);
  VerdictReport r("direction");
  r.add("robust", v.robustly_more_informative);
  if (v.gamma) r.add("gamma", *v.gamma);
  if (v.witness) {
    const auto& w = *v.witness;
    const auto values = compare_on_problem(e, e_prime, witness_decision_problem(w));
    require(values.first < values.second, "witness problem separates the maxmin values");
    r.add("witness.mu", w.mu.weights())
        .add("witness.direction", w.direction)
        .add("witness.lambda", w.lambda)
        .add("witness.p", w.p.weights())
        .add("witness.action", w.action.payoffs())
        .add("witness.margin", w.margin)
        .add("witness.maxmin_first", values.first)
        .add("witness.maxmin_second", values.second);
  }
  return r;
}

std::string relation_text(RobustRelation relation) {
  switch (relation) {
    case RobustRelation::FirstDominates: return "E > E'";
    case RobustRelation::SecondDominates: return "E' > E";
    case RobustRelation::Equivalent: return "equivalent";
    case RobustRelation::Incomparable: return "incomparable";
  }
  return "unknown";
}

VerdictReport garbling_direction(const Experiment& e, const Experiment& e_prime, StochasticityConvention c) {
  const GarblingResult g = blackwell_garbling(e, e_prime, c);
  VerdictReport r("direction");
  r.add("feasible", g.feasible);
  if (g.gamma) r.add("gamma", *g.gamma);
  return r;
}

StochasticityConvention other(StochasticityConvention c) {
  return c == StochasticityConvention::RowStochastic ? StochasticityConvention::ColumnStochastic
                                                     : StochasticityConvention::RowStochastic;
}

}  // namespace

VerdictReport compare_experiments(const Experiment& e, const Experiment& e_prime, const std::string& label_e,
                                  const std::string& label_e_prime) {
  require_same_states(e, e_prime, label_e, label_e_prime);
  const VerdictReport forward = direction_report(e, e_prime);
  const VerdictReport backward = direction_report(e_prime, e);
  const bool f = std::get<bool>(forward.at("robust"));
  const bool b = std::get<bool>(backward.at("robust"));

  VerdictReport r("compare");
  r.add("E", label_e).add("E'", label_e_prime).add("states", std::to_string(e.states()));
  r.add("relation", relation_text(classify(f, b)));
  r.merge("forward.", forward);
  r.merge("backward.", backward);
  return r;
}

VerdictReport cmd_compare(const std::filesystem::path& e, const std::filesystem::path& e_prime) {
  return compare_experiments(read_experiment(e), read_experiment(e_prime), e.string(), e_prime.string());
}

VerdictReport garbling_experiments(const Experiment& e, const Experiment& e_prime,
                                   StochasticityConvention convention, const std::string& label_e,
                                   const std::string& label_e_prime) {
  require_same_states(e, e_prime, label_e, label_e_prime);
  VerdictReport r("garbling");
  r.add("E", label_e).add("E'", label_e_prime).add("convention", std::string(to_string(convention)));

  const VerdictReport forward = garbling_direction(e, e_prime, convention);
  const VerdictReport backward = garbling_direction(e_prime, e, convention);
  r.merge("forward.", forward).merge("backward.", backward);

  const StochasticityConvention alt = other(convention);
  const VerdictReport alt_forward = garbling_direction(e, e_prime, alt);
  const VerdictReport alt_backward = garbling_direction(e_prime, e, alt);
  const std::string alt_name = to_string(alt);
  r.add(alt_name + ".forward.feasible", alt_forward.at("feasible"));
  r.add(alt_name + ".backward.feasible", alt_backward.at("feasible"));

  auto disagree = [&](const VerdictReport& a, const VerdictReport& b, const char* dir) {
    if (std::get<bool>(a.at("feasible")) != std::get<bool>(b.at("feasible"))) {
      r.note(std::string(dir) + ": the " + to_string(convention) + " and " + alt_name +
             " stochasticity conventions disagree on garbling feasibility");
    }
  };
  disagree(forward, alt_forward, "E to E'");
  disagree(backward, alt_backward, "E' to E");
  return r;
}

VerdictReport cmd_garbling(const std::filesystem::path& e, const std::filesystem::path& e_prime,
                           StochasticityConvention convention) {
  return garbling_experiments(read_experiment(e), read_experiment(e_prime), convention, e.string(),
                              e_prime.string());
}

VerdictReport cmd_identified_set(const std::filesystem::path& e_path, const std::filesystem::path& mu_path) {
  const Experiment e = read_experiment(e_path);
  const Prior mu = read_prior(mu_path);
  if (mu.size() != e.states()) {
    throw InputError(mu_path.string(), 0, 0,
                     "prior has " + std::to_string(mu.size()) + " states, experiment has " +
                         std::to_string(e.states()));
  }
  const IdentifiedSet set = identified_set(e, mu);
  VerdictReport r("identified-set");
  r.add("E", e_path.string()).add("mu", mu.weights()).add("observed", set.observed());
  r.add("rank", std::to_string(rank(e.matrix())));
  r.add("singleton", set.is_singleton()).add("full_simplex", set.is_full_simplex());
  const auto& vs = set.vertices();
  r.add("vertex_count", std::to_string(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    require(set.contains(vs[i]), "vertex lies in the identified set");
    r.add("vertex." + std::to_string(i), vs[i].weights());
  }
  return r;
}

VerdictReport cmd_maxmin(const std::filesystem::path& e_path, const std::filesystem::path& problem_path) {
  const Experiment e = read_experiment(e_path);
  const DecisionProblem problem = read_problem(problem_path);
  if (problem.states() != e.states()) {
    throw InputError(problem_path.string(), 0, 0,
                     "problem has " + std::to_string(problem.states()) + " states, experiment has " +
                         std::to_string(e.states()));
  }
  const MaxminOutcome out = maxmin(e, problem);
  require(identified_set(e, problem.prior()).contains(out.worst_prior), "worst prior is plausible");
  require(out.value == out.best_action.expected(out.worst_prior), "value matches best action at worst prior");

  VerdictReport r("maxmin");
  r.add("E", e_path.string()).add("problem", problem_path.string());
  r.add("value", out.value);
  r.add("best_action_index", std::to_string(out.best_action_index));
  r.add("best_action", out.best_action.payoffs());
  r.add("worst_prior", out.worst_prior.weights());
  return r;
}

VerdictReport cmd_reproduce_example() {
  const Experiment e = validate_experiment(RatMatrix{{"0.8"_q, "0.2"_q}, {"0.2"_q, "0.8"_q}});
  const Experiment ep = validate_experiment(RatMatrix{{"0.7"_q, "0.4"_q}, {"0.3"_q, "0.6"_q}});

  const auto e_inv = invert(e.matrix());
  const auto ep_inv = invert(ep.matrix());
  require(e_inv.has_value() && ep_inv.has_value(), "both experiments are invertible");
  require(rank(e.matrix()) == 2 && rank(ep.matrix()) == 2, "both experiments have full rank");
  require(*e_inv == RatMatrix{{"4/3"_q, "-1/3"_q}, {"-1/3"_q, "4/3"_q}}, "E^-1 = [[4/3,-1/3],[-1/3,4/3]]");
  require(*ep_inv == RatMatrix{{2, "-4/3"_q}, {-1, "7/3"_q}}, "E'^-1 = [[2,-4/3],[-1,7/3]]");

  const auto gamma = linear_factor(e, ep);
  const auto gamma_prime = linear_factor(ep, e);
  require(gamma && gamma_prime, "linear factors exist both ways");
  require(*gamma == ep.matrix() * *e_inv, "Gamma = E' E^-1");
  require(*gamma_prime == e.matrix() * *ep_inv, "Gamma' = E E'^-1");
  require(*gamma == RatMatrix{{"0.8"_q, "0.3"_q}, {"0.2"_q, "0.7"_q}}, "Gamma = [[0.8,0.3],[0.2,0.7]]");
  require(*gamma_prime == RatMatrix{{"1.4"_q, "-0.6"_q}, {"-0.4"_q, "1.6"_q}}, "Gamma' = [[1.4,-0.6],[-0.4,1.6]]");

  const RatVector gamma_rows = gamma->row_sums();
  require(gamma_rows == RatVector{"11/10"_q, "9/10"_q}, "Gamma row sums are 11/10 and 9/10");
  require(gamma_prime->has_negative_entry(), "Gamma' has a negative entry");

  const bool fwd = robustly_more_informative(e, ep).robustly_more_informative;
  const bool bwd = robustly_more_informative(ep, e).robustly_more_informative;
  require(classify(fwd, bwd) == RobustRelation::Equivalent, "robust order: equivalent");

  const auto row_f = blackwell_garbling(e, ep, StochasticityConvention::RowStochastic);
  const auto row_b = blackwell_garbling(ep, e, StochasticityConvention::RowStochastic);
  require(!row_f.feasible && !row_b.feasible, "no row-stochastic garbling in either direction");

  const auto col_f = blackwell_garbling(e, ep, StochasticityConvention::ColumnStochastic);
  const auto col_b = blackwell_garbling(ep, e, StochasticityConvention::ColumnStochastic);
  require(col_f.feasible && *col_f.gamma == *gamma, "column-stochastic garbling E to E' is Gamma");
  require(!col_b.feasible, "no column-stochastic garbling E' to E");

  VerdictReport r("reproduce-example");
  r.add("E", e.matrix()).add("E'", ep.matrix());
  r.add("E_inverse", *e_inv).add("E'_inverse", *ep_inv);
  r.add("gamma", *gamma).add("gamma_row_sums", gamma_rows).add("gamma_row_stochastic", false);
  r.add("gamma'", *gamma_prime).add("gamma'_has_negative_entry", true);
  r.add("robust.relation", relation_text(classify(fwd, bwd)));
  r.add("row.forward.feasible", row_f.feasible).add("row.backward.feasible", row_b.feasible);
  r.add("row.relation", std::string("incomparable"));
  r.add("column.forward.feasible", col_f.feasible).add("column.forward.gamma", *col_f.gamma);
  r.add("column.backward.feasible", col_b.feasible);
  r.add("checks", std::string("all passed"));
  r.note("the pair is comparable (both ways) under the robust order but not under row-stochastic garbling");
  r.note("Gamma has unit column sums, so under the column convention E garbles into E'");
  return r;
}

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DimensionError& e) {
    err << "dimension mismatch: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const PreconditionViolated& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (...) {
    err << "internal error: unknown exception\n";
    return kExitInternal;
  }
}

namespace {

struct BatchEntry {
  std::size_t line;
  std::string text;
  std::vector<std::string> tokens;
};

struct BatchResult {
  int code = kExitOk;
  std::string out;
  std::string err;
};

std::vector<BatchEntry> read_manifest(const std::filesystem::path& manifest) {
  std::istringstream is(read_file(manifest));
  std::vector<BatchEntry> entries;
  std::size_t number = 0;
  for (std::string line; std::getline(is, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    BatchEntry entry{number, {}, {}};
    for (std::string tok; ls >> tok;) entry.tokens.push_back(tok);
    if (entry.tokens.empty()) continue;
    for (const auto& t : entry.tokens) entry.text += (entry.text.empty() ? "" : " ") + t;
    entries.push_back(std::move(entry));
  }
  return entries;
}

BatchResult run_entry(const BatchEntry& entry, const std::filesystem::path& base, const BatchOptions& options) {
  BatchResult result;
  std::ostringstream out;
  std::ostringstream err;
  const std::string& command = entry.tokens.front();

  if (command == "random-compare") {
    // random-compare M M' N COUNT: COUNT pairs drawn from the batch seed.
    try {
      if (entry.tokens.size() != 5) {
        throw InputError("manifest", entry.line, 0, "usage: random-compare M M' N COUNT");
      }
      auto num = [&](std::size_t i) {
        try {
          return static_cast<std::size_t>(std::stoul(entry.tokens[i]));
        } catch (const std::exception&) {
          throw InputError("manifest", entry.line, i + 1, "expected a count, got '" + entry.tokens[i] + "'");
        }
      };
      const std::size_t m = num(1), mp = num(2), n = num(3), count = num(4);
      if (m == 0 || mp == 0 || n == 0) throw InputError("manifest", entry.line, 0, "sizes must be positive");
      for (std::size_t k = 0; k < count; ++k) {
        const std::uint64_t s = options.seed + 2 * k;
        const auto e = random_experiment(m, n, s, 20);
        const auto ep = random_experiment(mp, n, s + 1, 20);
        VerdictReport r = compare_experiments(e, ep, "random(seed=" + std::to_string(s) + ")",
                                              "random(seed=" + std::to_string(s + 1) + ")");
        r.add("E.matrix", e.matrix()).add("E'.matrix", ep.matrix());
        out << render(r, options.format);
      }
    } catch (...) {
      result.code = exit_code_for_current_exception(err);
    }
  } else if (command == "batch") {
    err << "error: manifest line " << entry.line << ": nested batch is not supported\n";
    result.code = kExitInvalidInput;
  } else {
    std::vector<std::string> args{"--format", options.format == ReportFormat::Table ? "table" : "kv", command};
    bool flag_value = false;
    for (std::size_t i = 1; i < entry.tokens.size(); ++i) {
      const std::string& tok = entry.tokens[i];
      const bool is_flag = tok.rfind("--", 0) == 0;
      if (is_flag || flag_value) {
        args.push_back(tok);
        flag_value = is_flag && tok.find('=') == std::string::npos;
        continue;
      }
      const std::filesystem::path p(tok);
      args.push_back(p.is_absolute() ? tok : (base / p).string());
    }
    result.code = run_cli(args, out, err);
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace

int cmd_batch(const std::filesystem::path& manifest, const BatchOptions& options, std::ostream& out,
              std::ostream& err) {
  const auto entries = read_manifest(manifest);
  const auto base = manifest.parent_path();
  std::vector<BatchResult> results(entries.size());

  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(entries.size(), 1)));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
          results[i] = run_entry(entries[i], base, options);
        }
      });
    }
  }

  int code = kExitOk;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << "# entry " << i << " (line " << entries[i].line << "): " << entries[i].text << '\n';
    out << results[i].out;
    if (!results[i].err.empty()) err << "entry " << i << " (line " << entries[i].line << "): " << results[i].err;
    if (results[i].code != kExitOk) ++failed;
    code = std::max(code, results[i].code);
  }
  out << "# batch: " << entries.size() << " entries, " << failed << " failed\n";
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact comparison of statistical experiments: robust and garbling orders"};
  app.name("robinf");
  app.require_subcommand(1);
  app.fallthrough();

  ReportFormat format = ReportFormat::Table;
  const std::map<std::string, ReportFormat> formats{{"table", ReportFormat::Table}, {"kv", ReportFormat::KeyValue}};
  app.add_option("--format", format, "Report layout")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))->type_name("table|kv");

  std::string e_path, ep_path, aux_path;
  StochasticityConvention convention = StochasticityConvention::RowStochastic;
  const std::map<std::string, StochasticityConvention> conventions{
      {"row", StochasticityConvention::RowStochastic}, {"column", StochasticityConvention::ColumnStochastic}};

  auto* compare = app.add_subcommand("compare", "Robust order in both directions, with factors or witnesses");
  compare->add_option("E", e_path, "First experiment file")->required();
  compare->add_option("E_prime", ep_path, "Second experiment file")->required();

  auto* garbling = app.add_subcommand("garbling", "Garbling (Blackwell) feasibility in both directions");
  garbling->add_option("E", e_path, "First experiment file")->required();
  garbling->add_option("E_prime", ep_path, "Second experiment file")->required();
  garbling->add_option("--convention", convention, "Stochasticity of the garbling matrix")
      ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case).description(""))->type_name("row|column")->capture_default_str();

  auto* idset = app.add_subcommand("identified-set", "Plausible priors for an observed signal distribution");
  idset->add_option("E", e_path, "Experiment file")->required();
  idset->add_option("MU", aux_path, "Prior file (one row)")->required();

  auto* mm = app.add_subcommand("maxmin", "Maxmin value of a decision problem");
  mm->add_option("E", e_path, "Experiment file")->required();
  mm->add_option("PROBLEM", aux_path, "Problem file: prior line, then one action per line")->required();

  app.add_subcommand("reproduce-example", "Recompute and check the two-state example pair");

  BatchOptions batch_options;
  auto* batch = app.add_subcommand("batch", "Run every command listed in a manifest file");
  batch->add_option("MANIFEST", aux_path, "Manifest file")->required();
  batch->add_option("--seed", batch_options.seed, "Base seed for random-compare lines");
  batch->add_option("--threads", batch_options.threads, "Worker threads (0: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*batch) {
      batch_options.format = format;
      return cmd_batch(aux_path, batch_options, out, err);
    }
    VerdictReport report = [&] {
      if (*compare) return cmd_compare(e_path, ep_path);
      if (*garbling) return cmd_garbling(e_path, ep_path, convention);
      if (*idset) return cmd_identified_set(e_path, aux_path);
      if (*mm) return cmd_maxmin(e_path, aux_path);
      return cmd_reproduce_example();
    }();
    out << render(report, format);
    return kExitOk;
  } catch (...) {
    return exit_code_for_current_exception(err);
  }
}

}  // namespace robinf::cli

#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cmpoly/dynamics/crosscheck.hpp"
#include "cmpoly/error.hpp"
#include "cmpoly/io/serialize.hpp"
#include "cmpoly/io/space_file.hpp"
#include "cmpoly/jets/admissibility.hpp"
#include "cmpoly/liegroup/catalog.hpp"
#include "cmpoly/minpoly/c0_witness.hpp"
#include "cmpoly/minpoly/diagnostics.hpp"
#include "cmpoly/minpoly/pointwise.hpp"
#include "cmpoly/minpoly/rational_relation.hpp"
#include "cmpoly/minpoly/sampling.hpp"
#include "cmpoly/minpoly/solver.hpp"
#include "cmpoly/singer/singer.hpp"
#include "cmpoly/version.hpp"

namespace cmpoly::cli {
namespace {

using nlohmann::json;

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json config_json(const RunConfig& cfg) {
  json c{{"space", cfg.space},
         {"seed", cfg.seed},
         {"samples", cfg.samples},
         {"max_k", cfg.max_k ? json(*cfg.max_k) : json(nullptr)},
         {"verify", cfg.verify}};
  if (cfg.direction) c["direction"] = io::to_json(*cfg.direction);
  return c;
}

json provenance(const RunConfig& cfg, const std::string& command, json config) {
  json p{{"version", CMPOLY_VERSION}, {"command", command}, {"config", std::move(config)}};
  if (cfg.timestamp) p["timestamp"] = utc_timestamp();
  return p;
}

jets::JetSequence load(const RunConfig& cfg) {
  if (cfg.space.empty()) throw UsageError("--space is required");
  return jets::JetSequence::from_lie(io::load_space(cfg.space));
}

int severity(int code) {
  switch (code) {
    case kOk: return 0;
    case kToleranceFailure: return 1;
    case kRationalOnly: return 2;
    case kBoundExceeded: return 3;
    default: return 4;
  }
}

int worst(int a, int b) { return severity(a) >= severity(b) ? a : b; }

minpoly::SolveOutcome solve(const jets::JetSequence& seq, const RunConfig& cfg) {
  const minpoly::SolveOptions options{cfg.seed, cfg.samples, cfg.max_k};
  if (cfg.verify == "exact") return minpoly::compute_min_poly(seq, options);
  if (cfg.verify != "sampled") throw UsageError("--verify must be 'exact' or 'sampled'");
  minpoly::SolveOutcome out;
  out.degree = minpoly::generic_degree(seq, cfg.max_k, cfg.seed, cfg.samples);
  if (out.degree.bound_exceeded) {
    out.status = minpoly::SolveOutcome::Status::bound_exceeded;
    return out;
  }
  try {
    auto coeffs = minpoly::solve_coefficients(seq, out.degree.k, cfg.seed);
    auto p = PolyLambda::monic(seq.dim(), std::move(coeffs));
    auto v = minpoly::verify_sampled(seq, p, out.degree.witness, cfg.seed, cfg.samples);
    if (!v.ok()) {
      out.status = minpoly::SolveOutcome::Status::verification_failed;
      out.detail = v.detail;
      return out;
    }
    out.min_poly = std::move(v.result);
  } catch (const minpoly::NotPolynomialError& e) {
    out.status = minpoly::SolveOutcome::Status::rational_only;
    out.detail = e.what();
  }
  return out;
}

json coefficients_json(const minpoly::MinimalPolynomial& mp) {
  json coeffs = json::array();
  for (int i = 1; i <= mp.degree(); ++i) coeffs.push_back(io::to_json(mp.a(static_cast<std::size_t>(i))));
  return coeffs;
}

json root_structure_json(const jets::JetSequence& seq, const minpoly::MinimalPolynomial& mp, std::uint64_t seed) {
  if (!seq.positive_definite()) return json{{"skipped", "diagnostic requires positive-definite metric"}};
  constexpr std::size_t kPoints = 16;
  bool all_pass = true;
  const auto at_witness = minpoly::root_structure(seq, mp.p, mp.witness);
  all_pass = at_witness.pure_imaginary_simple;
  minpoly::PointSampler sampler(seed + 1);
  for (std::size_t s = 0; s < kPoints; ++s) {
    all_pass = all_pass && minpoly::root_structure(seq, mp.p, sampler.next(seq.dim())).pure_imaginary_simple;
  }
  return json{{"points", kPoints + 1},
              {"pure_imaginary_simple", all_pass},
              {"zero_root", at_witness.zero_root},
              {"alternate_vanish", at_witness.alternate_vanish}};
}

json ricci_json(const minpoly::RicciReport& r) {
  return json{{"trace_zero", r.trace_zero},
              {"ricci_nonzero", r.ricci_nonzero},
              {"last_coefficient_zero", r.last_coefficient_zero},
              {"degree_odd", r.degree_odd},
              {"consistent", r.consistent}};
}

json ideal_closure_json(const jets::JetSequence& seq, const minpoly::MinimalPolynomial& mp) {
  const std::size_t n = seq.dim();
  const PolyLambda lambda = PolyLambda::lambda_power(n, 1);
  const PolyLambda factors[] = {
      lambda,
      PolyLambda(n, {MultiPoly::constant(n, 1), MultiPoly::variable(n, 0), MultiPoly(n)}),
  };
  bool passed = true;
  for (const auto& f : factors) {
    const PolyLambda q = f * mp.p;
    const auto report = minpoly::divides(seq, q, mp);
    passed = passed && report.divisible && report.quotient == f;
  }
  return json{{"checks", std::size(factors)}, {"passed", passed}};
}

json singer_json(const singer::SingerReport& r) {
  return json{{"dims", r.dims},
              {"k_singer", r.k_singer ? json(*r.k_singer) : json(nullptr)},
              {"k", r.k},
              {"nested", r.nested},
              {"bound_holds", r.bound_holds}};
}

singer::SingerReport run_singer(const jets::JetSequence& seq, int k) {
  return singer::singer_invariant(*seq.curvature(k + 1), k, seq.metric());
}

// Minimal-polynomial record shared by minpoly, singer and all.
CommandResult minpoly_record(const jets::JetSequence& seq, const RunConfig& cfg, bool diagnostics) {
  CommandResult res;
  const auto outcome = solve(seq, cfg);
  json& rec = res.record;
  rec["space"] = seq.name();
  rec["status"] = minpoly::to_string(outcome.status);
  rec["k"] = outcome.degree.k;
  rec["seed"] = cfg.seed;
  rec["samples"] = cfg.samples;
  rec["max_k"] = outcome.degree.max_k;
  switch (outcome.status) {
    case minpoly::SolveOutcome::Status::bound_exceeded:
      rec["verified"] = false;
      rec["detail"] = outcome.detail;
      res.exit_code = kBoundExceeded;
      res.summary = seq.name() + ": degree bound " + std::to_string(outcome.degree.max_k) + " exceeded";
      return res;
    case minpoly::SolveOutcome::Status::rational_only: {
      rec["verified"] = false;
      rec["detail"] = outcome.detail;
      const auto rel = minpoly::rational_relation(seq, outcome.degree.k);
      json coeffs = json::array();
      for (const auto& a : rel.a) coeffs.push_back(io::to_json(a));
      rec["rational_relation"] = json{{"k", rel.k}, {"coefficients", coeffs}, {"verified", rel.verified}};
      res.exit_code = kRationalOnly;
      res.summary = seq.name() + ": coefficients not polynomial; rational relation of degree " +
                    std::to_string(rel.k);
      return res;
    }
    case minpoly::SolveOutcome::Status::verification_failed:
      rec["verified"] = false;
      rec["detail"] = outcome.detail;
      res.exit_code = kToleranceFailure;
      res.summary = seq.name() + ": verification failed: " + outcome.detail;
      return res;
    case minpoly::SolveOutcome::Status::verified: break;
  }
  const auto& mp = *outcome.min_poly;
  rec["coefficients"] = coefficients_json(mp);
  rec["polynomial"] = mp.p.to_string();
  rec["witness"] = io::to_json(mp.witness);
  rec["verified"] = mp.verified;
  rec["verification"] = cfg.verify;
  res.summary = seq.name() + ": k = " + std::to_string(mp.degree()) + ", P_min = " + mp.p.to_string() +
                (mp.verified ? " (verified)" : " (sampled check)");
  if (!diagnostics) return res;

  json diag;
  diag["root_structure"] = root_structure_json(seq, mp, cfg.seed);
  diag["ricci"] = ricci_json(minpoly::ricci_diagnostics(seq, mp));
  diag["ideal_closure"] = ideal_closure_json(seq, mp);
  const auto sr = run_singer(seq, mp.degree());
  diag["singer"] = singer_json(sr);
  if (!sr.bound_holds) std::cerr << "warning: Singer bound violated on " << seq.name() << "\n";
  if (mp.degree() >= 1) {
    const auto w = minpoly::c0_witness(seq, mp.witness, mp.degree());
    diag["c0_witness"] = json{{"feasible", w.feasible},
                              {"orders", mp.degree()},
                              {"solution_dimension", w.solution_dimension},
                              {"c", w.feasible ? io::to_json(w.c) : json(nullptr)}};
  }
  rec["diagnostics"] = std::move(diag);
  return res;
}

QVector default_direction(std::size_t n) {
  QVector x(n);
  x.front() = 1;
  x.back() = 1;
  return x;
}

json crosscheck_section(const jets::JetSequence& seq, const RunConfig& cfg, const minpoly::MinimalPolynomial* mp,
                        int& exit_code, std::string& summary) {
  const auto* pres = seq.presentation();
  const auto* conn = seq.connection();
  const std::size_t n = seq.dim();
  const QVector x = cfg.direction.value_or(default_direction(n));
  if (x.size() != n) throw UsageError("--direction needs " + std::to_string(n) + " components");
  const double norm = std::sqrt(pres->inner(x, x).get_d());
  if (!(norm > 0.0)) throw UsageError("--direction must be nonzero");
  std::vector<double> x0(n);
  for (std::size_t i = 0; i < n; ++i) x0[i] = x[i].get_d() / norm;

  const int max_order = std::min(cfg.fd_order, 4);
  const auto d = seq.curvature(0);
  const dynamics::GeodesicFlow flow(*pres, *conn, x0, cfg.h);
  const auto fd = dynamics::finite_difference_jets(flow, *d, max_order, cfg.h_fd, cfg.tolerance);
  const auto path = flow.path(cfg.t_end);
  const auto drift = dynamics::invariant_drift(flow, path);

  bool ok = true;
  int reliable_orders = 0;
  json orders = json::array();
  std::vector<dynamics::Matrix> numeric{dynamics::transported_jacobi(path.front(), *d)};
  for (const auto& jet : fd) {
    const auto exact = seq.jet(jet.order).evaluate(std::span<const double>(x0));
    double rel = 0.0;
    if (!jet.value.empty()) {
      dynamics::Matrix diff(exact.size());
      for (std::size_t e = 0; e < exact.size(); ++e) diff[e] = jet.value[e] - exact[e];
      const double scale = dynamics::frobenius(exact);
      rel = dynamics::frobenius(diff) / (scale > 1e-12 ? scale : 1.0);
    }
    if (jet.reliable && !(rel < cfg.tolerance)) ok = false;
    if (jet.reliable) ++reliable_orders;
    orders.push_back(json{{"i", jet.order}, {"rel_error", rel}, {"reliable", jet.reliable}});
    numeric.push_back(jet.value);
  }

  // Nothing was compared when roundoff swamps every order.
  if (reliable_orders == 0) ok = false;

  json section{{"direction", io::to_json(x)},
               {"orders", orders},
               {"h", cfg.h},
               {"h_fd", cfg.h_fd},
               {"t_end", cfg.t_end},
               {"tolerance", cfg.tolerance},
               {"killing_tolerance", cfg.killing_tolerance},
               {"speed_drift", drift.speed},
               {"isometry_drift", drift.isometry}};

  if (mp != nullptr) {
    std::vector<MultiPoly> coeffs;
    for (int i = 1; i <= mp->degree(); ++i) coeffs.push_back(mp->a(static_cast<std::size_t>(i)));
    const auto kd = dynamics::killing_constancy(path, coeffs);
    for (double v : kd) ok = ok && v < cfg.killing_tolerance;
    section["killing_drift"] = kd;

    const int k = mp->degree();
    if (k <= max_order && fd[static_cast<std::size_t>(std::max(k, 1)) - 1].reliable) {
      // sum_i a_i(X0) R^{k-i} with numeric jets
      dynamics::Matrix rel(n * n, 0.0);
      for (int i = 0; i <= k; ++i) {
        const double a = mp->a(static_cast<std::size_t>(i)).evaluate(std::span<const double>(x0));
        const auto& m = numeric[static_cast<std::size_t>(k - i)];
        for (std::size_t e = 0; e < rel.size(); ++e) rel[e] += a * m[e];
      }
      const double r = dynamics::frobenius(rel);
      section["relation_residual"] = r;
      ok = ok && r < cfg.tolerance;
    }
    if (k >= 1) {
      // C is linear in X, so the witness at x scales to x0 by 1/norm.
      const auto w = minpoly::c0_witness(seq, x, k);
      if (w.feasible) {
        dynamics::Matrix c(n * n);
        for (std::size_t e = 0; e < n * n; ++e) c[e] = w.c.values()[e].get_d() / norm;
        section["conjugation_residual"] = dynamics::conjugation_check(path, *d, c);
      } else {
        section["conjugation_residual"] = nullptr;
      }
    }
  }
  section["within_tolerance"] = ok;
  if (!ok) exit_code = worst(exit_code, kToleranceFailure);
  summary += std::string(summary.empty() ? "" : "\n") + seq.name() + ": crosscheck " +
             (ok ? "within tolerance" : "TOLERANCE EXCEEDED");
  return section;
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("CMPOLY_SEED");
  if (env == nullptr || *env == '\0') return 42;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("CMPOLY_SEED is not an unsigned integer: ") + env);
  }
}

QVector parse_direction(const std::string& text) {
  QVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty component in direction '" + text + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw UsageError("direction is empty");
  return out;
}

CommandResult cmd_catalog() {
  CommandResult res;
  json entries = json::array();
  for (const auto& e : lie::catalog_entries()) {
    entries.push_back(json{{"name", e.name},
                           {"signature", e.signature},
                           {"description", e.description},
                           {"locally_symmetric", e.locally_symmetric}});
    res.summary += e.signature + "\n    " + e.description + "\n";
  }
  res.record = json{{"catalog", entries}};
  return res;
}

CommandResult cmd_jets(const RunConfig& cfg) {
  const auto seq = load(cfg);
  if (cfg.max_order < 0) throw UsageError("--max-order must be non-negative");
  CommandResult res;
  json dumps = json::array();
  for (int k = 0; k <= cfg.max_order; ++k) dumps.push_back(io::jet_dump(seq.jet(k), k));
  const auto report = jets::validate(seq, cfg.max_order);
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(json{{"order", v.order}, {"kind", jets::to_string(v.kind)}, {"detail", v.detail}});
  }
  json config = config_json(cfg);
  config["max_order"] = cfg.max_order;
  res.record = json{{"space", seq.name()},
                    {"dim", seq.dim()},
                    {"jets", dumps},
                    {"validation", json{{"ok", report.ok()}, {"violations", violations}}},
                    {"provenance", provenance(cfg, "jets", config)}};
  res.summary = seq.name() + ": jets 0.." + std::to_string(cfg.max_order) +
                (report.ok() ? " valid" : " with validation violations");
  return res;
}

CommandResult cmd_minpoly(const RunConfig& cfg) {
  const auto seq = load(cfg);
  auto res = minpoly_record(seq, cfg, true);
  res.record["provenance"] = provenance(cfg, "minpoly", config_json(cfg));
  return res;
}

CommandResult cmd_pointwise(const RunConfig& cfg) {
  const auto seq = load(cfg);
  if (!cfg.direction) throw UsageError("--direction is required");
  const QVector& x = *cfg.direction;
  if (x.size() != seq.dim()) throw UsageError("--direction needs " + std::to_string(seq.dim()) + " components");
  CommandResult res;
  const auto pm = minpoly::pointwise_min_poly(seq, x);
  json& rec = res.record;
  rec["space"] = seq.name();
  rec["direction"] = io::to_json(x);
  rec["k"] = pm->k;
  rec["polynomial"] = io::to_json(pm->p);
  rec["polynomial_text"] = pm->p.to_string();
  if (seq.positive_definite()) {
    const auto rs = minpoly::root_structure(pm->p);
    rec["root_structure"] = json{{"pure_imaginary_simple", rs.pure_imaginary_simple},
                                 {"zero_root", rs.zero_root},
                                 {"alternate_vanish", rs.alternate_vanish}};
  }
  const auto outcome = solve(seq, cfg);
  if (outcome.min_poly) {
    const UniPoly spec = outcome.min_poly->p.specialize(x);
    rec["global_specialized"] = spec.to_string();
    rec["divides_global"] = minpoly::unipoly_divides(pm->p, spec);
  }
  rec["provenance"] = provenance(cfg, "pointwise", config_json(cfg));
  res.summary = seq.name() + ": k(X) = " + std::to_string(pm->k) + ", P = " + pm->p.to_string();
  return res;
}

CommandResult cmd_singer(const RunConfig& cfg) {
  const auto seq = load(cfg);
  auto res = minpoly_record(seq, cfg, false);
  if (res.exit_code == kOk) {
    const int k = res.record["k"].get<int>();
    const auto sr = run_singer(seq, k);
    res.record["singer"] = singer_json(sr);
    res.summary += "\n" + seq.name() + ": Singer dims";
    for (auto d : sr.dims) res.summary += " " + std::to_string(d);
    res.summary += sr.bound_holds ? ", bound holds" : ", BOUND VIOLATED";
  }
  res.record["provenance"] = provenance(cfg, "singer", config_json(cfg));
  return res;
}

CommandResult cmd_crosscheck(const RunConfig& cfg) {
  const auto seq = load(cfg);
  const auto outcome = solve(seq, cfg);
  CommandResult res;
  res.record["space"] = seq.name();
  const auto* mp = outcome.min_poly ? &*outcome.min_poly : nullptr;
  res.record["crosscheck"] = crosscheck_section(seq, cfg, mp, res.exit_code, res.summary);
  json config = config_json(cfg);
  config["h"] = cfg.h;
  config["h_fd"] = cfg.h_fd;
  config["t_end"] = cfg.t_end;
  res.record["provenance"] = provenance(cfg, "crosscheck", config);
  return res;
}

CommandResult cmd_all(const RunConfig& cfg) {
  const auto seq = load(cfg);
  auto res = minpoly_record(seq, cfg, true);
  if (res.exit_code == kOk) {
    const auto outcome = solve(seq, cfg);
    res.record["crosscheck"] = crosscheck_section(seq, cfg, &*outcome.min_poly, res.exit_code, res.summary);
  }
  json config = config_json(cfg);
  config["h"] = cfg.h;
  config["h_fd"] = cfg.h_fd;
  config["t_end"] = cfg.t_end;
  res.record["provenance"] = provenance(cfg, "all", config);
  return res;
}

int run(int argc, char** argv) {
  CLI::App app{"Minimal polynomials of curvature jets on Lie groups with left-invariant metrics", "cmpoly"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CMPOLY_VERSION);

  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string direction;
  bool quiet = false;
  bool no_timestamp = false;

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--space", cfg.space, "catalog name (e.g. heisenberg3, su2_berger(1/2)) or space file")
        ->required();
    sub->add_option("--out", cfg.out, "write the JSON record to this file");
    sub->add_flag("--quiet", quiet, "do not print the summary");
    sub->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from the record");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "sampling seed (default 42 or $CMPOLY_SEED)");
    sub->add_option("--samples", cfg.samples, "sample points for degree detection")->check(CLI::PositiveNumber);
    sub->add_option("--max-k", cfg.max_k, "degree bound (default n(n+1)/2)")->check(CLI::NonNegativeNumber);
    sub->add_option("--verify", cfg.verify, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  };
  auto add_dynamics = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
    sub->add_option("--h", cfg.h, "integration step")->check(CLI::PositiveNumber);
    sub->add_option("--h-fd", cfg.h_fd, "base finite-difference step")->check(CLI::PositiveNumber);
    sub->add_option("--t-end", cfg.t_end, "trajectory length")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", cfg.tolerance, "relative tolerance for jets and relation");
    sub->add_option("--killing-tolerance", cfg.killing_tolerance, "drift tolerance for Killing coefficients");
    sub->add_option("--fd-order", cfg.fd_order, "highest finite-difference order (<= 4)")->check(CLI::Range(1, 4));
    sub->add_option("--direction", direction, "initial direction \"a,b,c\" (default e1 + e_n)");
  };

  auto* catalog = app.add_subcommand("catalog", "list built-in spaces");
  catalog->add_flag("--quiet", quiet);
  auto* jets_cmd = app.add_subcommand("jets", "dump symmetrized jets R^0..R^K");
  add_space(jets_cmd);
  jets_cmd->add_option("--max-order", cfg.max_order, "highest jet order")->check(CLI::NonNegativeNumber);
  auto* minpoly_cmd = app.add_subcommand("minpoly", "compute and certify the minimal polynomial");
  add_space(minpoly_cmd);
  add_solver(minpoly_cmd);
  auto* pointwise = app.add_subcommand("pointwise", "minimal polynomial of the jets at one direction");
  add_space(pointwise);
  add_solver(pointwise);
  pointwise->add_option("--direction", direction, "direction \"a,b,c\"")->required();
  auto* singer_cmd = app.add_subcommand("singer", "stabilizer chain and the Singer bound");
  add_space(singer_cmd);
  add_solver(singer_cmd);
  auto* cross = app.add_subcommand("crosscheck", "numeric cross-validation along a geodesic");
  add_space(cross);
  add_solver(cross);
  add_dynamics(cross);
  auto* all = app.add_subcommand("all", "minpoly, diagnostics and crosscheck");
  add_space(all);
  add_solver(all);
  add_dynamics(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.seed = seed ? *seed : default_seed();
    cfg.timestamp = !no_timestamp;
    if (!direction.empty()) cfg.direction = parse_direction(direction);

    CommandResult res;
    if (catalog->parsed()) {
      res = cmd_catalog();
    } else if (jets_cmd->parsed()) {
      res = cmd_jets(cfg);
    } else if (minpoly_cmd->parsed()) {
      res = cmd_minpoly(cfg);
    } else if (pointwise->parsed()) {
      res = cmd_pointwise(cfg);
    } else if (singer_cmd->parsed()) {
      res = cmd_singer(cfg);
    } else if (cross->parsed()) {
      res = cmd_crosscheck(cfg);
    } else {
      res = cmd_all(cfg);
    }

    if (catalog->parsed()) {
      std::cout << res.summary;
      return res.exit_code;
    }
    const std::string text = res.record.dump(2) + "\n";
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) throw UsageError("cannot write " + cfg.out);
      out << text;
    }
    if (!quiet) std::cerr << res.summary << "\n";
    return res.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "cmpoly: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cmpoly: error: " << e.what() << "\n";
    return kToleranceFailure;
  }
}

}  // namespace cmpoly::cli

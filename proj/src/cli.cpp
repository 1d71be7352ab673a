#include "klf/cli.hpp"

#include <chrono>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "klf/eisenstein.hpp"
#include "klf/errors.hpp"
#include "klf/json_line.hpp"
#include "klf/point_io.hpp"
#include "klf/verify.hpp"

namespace klf {

namespace {

struct Options {
  std::string point_file;
  double s = 0.0;
  std::string method = "fast";
  std::string series = "estar";
  std::string suite;
  std::uint64_t seed = 1;
  TruncationSpec truncation;
  QuadratureSpec quadrature;
  bool no_timing = false;
};

JsonLine truncation_json(const TruncationSpec& t) {
  JsonLine j;
  j.add("lattice_radius", t.lattice_radius).add("tail_threshold", t.tail_threshold).add("m1_max", t.m1_max);
  return j;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const HalfPlanePoint p = load_point_file(o.point_file);
  const auto start = std::chrono::steady_clock::now();
  double value = 0.0;
  double error = 0.0;
  std::string series = "estar";
  if (o.method == "fast") {
    const FastExpansion r = e_star_expansion(p, o.s, o.truncation, o.quadrature);
    value = r.value;
    error = r.estimated_error + 1e-13 * std::abs(r.value);
  } else {
    const DirectTail tail = direct_tail(p, o.s, o.truncation.lattice_radius);
    if (o.method == "direct") {
      value = e_star_direct(p, o.s, o.truncation);
      error = completion_factor(p.dim(), o.s) * tail.bound;
    } else {
      series = "e";
      value = e_primitive_direct(p, o.s, o.truncation);
      error = tail.bound;
    }
  }
  const double ms =
      o.no_timing ? 0.0 : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  JsonLine j;
  j.add("method", o.method)
      .add("series", series)
      .add("n", p.dim())
      .add("s", o.s)
      .add("value", value)
      .add("truncation", truncation_json(o.truncation))
      .add("estimated_error", error)
      .add("wall_time_ms", ms);
  out << j.str() << '\n';
  return kExitOk;
}

int cmd_laurent(const Options& o, std::ostream& out) {
  const HalfPlanePoint p = load_point_file(o.point_file);
  const SeriesTag tag = o.series == "eprime" ? SeriesTag::E_PRIME : SeriesTag::E_STAR;
  const LaurentData d = laurent_at_1(p, tag, o.truncation, o.quadrature);
  JsonLine j;
  j.add("series", o.series)
      .add("n", p.dim())
      .add("pole_coefficient", d.pole_coefficient)
      .add("constant_term", d.constant_term);
  out << j.str() << '\n';
  return kExitOk;
}

int cmd_g(const Options& o, std::ostream& out) {
  const HalfPlanePoint p = load_point_file(o.point_file);
  const EtaValue e = eta_generalized(p, o.truncation, o.quadrature);
  JsonLine j;
  j.add("n", p.dim()).add("g", e.g).add("log_g", e.log_g).add("estimated_error", e.estimated_error);
  out << j.str() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SuiteResult r = run_suite(o.suite, o.seed, o.truncation, o.quadrature);
  int failures = 0;
  for (const auto& c : r.cases) {
    JsonLine j;
    j.add("suite", r.suite).add("case", c.index).add("pass", c.pass).add("error", c.error).add("tolerance", c.tolerance);
    for (const auto& [k, v] : c.data) j.add(k, v);
    out << j.str() << '\n';
    if (!c.pass) ++failures;
  }
  JsonLine summary;
  summary.add("suite", r.suite)
      .add("seed", o.seed)
      .add("cases", static_cast<int>(r.cases.size()))
      .add("failures", failures)
      .add("max_error", r.max_error())
      .add("pass", failures == 0);
  out << summary.str() << '\n';
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

void add_numeric_flags(CLI::App* sub, Options& o) {
  sub->add_option("--radius", o.truncation.lattice_radius, "sup-norm cutoff for direct sums")->check(CLI::PositiveNumber);
  sub->add_option("--tail", o.truncation.tail_threshold, "stopping threshold for exponential sums")
      ->check(CLI::PositiveNumber);
  sub->add_option("--qtol", o.quadrature.relative_tolerance, "quadrature relative tolerance")
      ->check(CLI::Range(1e-14, 1.0));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Maximal parabolic Eisenstein series on SL(n,Z): lattice sums, continuation and limit formula"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate a series at a point");
  eval->add_option("--point", o.point_file, "point file (JSON)")->required();
  eval->add_option("--s", o.s, "real argument s")->required();
  eval->add_option("--method", o.method, "direct | fast | primitive")
      ->check(CLI::IsMember({"direct", "fast", "primitive"}));
  eval->add_flag("--no-timing", o.no_timing, "write wall_time_ms as 0");
  add_numeric_flags(eval, o);

  auto* laurent = app.add_subcommand("laurent", "pole and constant term at s=1");
  laurent->add_option("--point", o.point_file, "point file (JSON)")->required();
  laurent->add_option("--series", o.series, "estar | eprime")->check(CLI::IsMember({"estar", "eprime"}));
  add_numeric_flags(laurent, o);

  auto* g = app.add_subcommand("g", "generalized eta function g(tau)");
  g->add_option("--point", o.point_file, "point file (JSON)")->required();
  add_numeric_flags(g, o);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "random seed");
  add_numeric_flags(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (laurent->parsed()) return cmd_laurent(o, out);
    if (g->parsed()) return cmd_g(o, out);
    return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    // domain, pole, convergence and unsupported-size failures
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace klf

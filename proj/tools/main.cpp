#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "knotcx/bounds.hpp"
#include "knotcx/cli.hpp"
#include "knotcx/integer_linalg.hpp"
#include "knotcx/rho.hpp"
#include "knotcx/signature.hpp"
#include "knotcx/verify.hpp"

using namespace knotcx;
using cli::Record;

namespace {

struct Common {
  std::string format = "table";
  std::optional<std::string> mode;
  bool require_certified = false;
};

Mode resolve_mode(const Common& c) {
  if (c.mode) return parse_mode(*c.mode);
  if (const char* env = std::getenv("RHO_MODE"); env && *env) return parse_mode(env);
  return Mode::exact;
}

bool singular_at(const SignatureFunction& sf, const UnitRoot& w) {
  if (!w.is_one()) return sf.alexander(w).is_zero();
  const auto& a = sf.matrix();
  const std::size_t m = a.size();
  std::vector<Integer> b(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b[i * m + j] = Integer(static_cast<long>(a(j, i) - a(i, j)));
  return integer_determinant(b, m) == 0;
}

int finish_certified(const Common& c, bool certified) {
  if (c.require_certified && !certified) {
    std::cerr << "error: result is not certified in float mode\n";
    return cli::uncertified;
  }
  return cli::ok;
}

int cmd_sig(const Common& c, const std::string& spec, const std::string& omega) {
  const auto k = cli::KnotSpec::parse(spec);
  const auto w = UnitRoot::parse(omega);
  const Mode mode = resolve_mode(c);
  const SignatureFunction sf(k.load());
  const auto v = sf(w, mode);
  {
    cli::Emitter out(cli::parse_format(c.format), std::cout);
    Record r;
    r.set("knot", k.text).set("omega", w.to_string()).set("mode", std::string(to_string(mode)));
    r.set("sigma", v.value).set("positive", v.inertia.positive).set("zero", v.inertia.zero).set("negative", v.inertia.negative);
    r.set("certified", v.certified()).set("singular", singular_at(sf, w));
    out.emit(r);
  }
  return finish_certified(c, v.certified());
}

int cmd_avg(const Common& c, const std::string& spec, long d) {
  require(d >= 1, ErrorKind::invalid_parameter, "d must be positive");
  const auto k = cli::KnotSpec::parse(spec);
  const Mode mode = resolve_mode(c);
  const auto avg = SignatureFunction(k.load()).average(d, mode);
  {
    cli::Emitter out(cli::parse_format(c.format), std::cout);
    out.emit(Record()
                 .set("knot", k.text)
                 .set("d", d)
                 .set("mode", std::string(to_string(mode)))
                 .set("avg_sig", avg.value)
                 .set("certified", avg.certified));
  }
  return finish_certified(c, avg.certified);
}

int cmd_rho(const Common& c, const std::string& spec, long n, bool levels) {
  require(n != 0, ErrorKind::invalid_slope, "surgery slope must be nonzero");
  const auto k = cli::KnotSpec::parse(spec);
  const Mode mode = resolve_mode(c);
  const auto a = k.load();
  const long m = std::labs(n);
  Record r;
  r.set("knot", k.text).set("slope", n).set("d", m).set("mode", std::string(to_string(mode)));
  bool certified = true;
  if (mode == Mode::exact) {
    const auto res = rho_finite_cyclic(knot_surgery_presentation(n, m), CableData::trivial(a), m);
    r.set("rho", res.value).set("mirrored", res.mirrored).set("certified", true);
    if (levels)
      for (std::size_t i = 0; i < res.per_level.size(); ++i) r.set("sigma_" + std::to_string(i), res.per_level[i]);
  } else {
    const SignatureFunction sf(n > 0 ? a : mirror(a));
    const auto avg = sf.average(m, mode);
    certified = avg.certified;
    r.set("rho", make_rational(m, 3) + make_rational(2, 3 * m) - 1 + avg.value).set("mirrored", n < 0).set("certified", certified);
    if (levels) {
      const long sign_lambda = 1;  // Lambda = (|n|) after mirroring
      r.set("sigma_0", Rational(0));
      for (long j = 1; j < m; ++j) {
        const auto s = sf(UnitRoot(j, m), mode);
        certified = certified && s.certified();
        r.set("sigma_" + std::to_string(j),
              Rational(s.value - sign_lambda) + make_rational(2 * (m - j) * j, m * m) * Rational(m));
      }
      r.set("certified", certified);
    }
  }
  {
    cli::Emitter out(cli::parse_format(c.format), std::cout);
    out.emit(r);
  }
  return finish_certified(c, certified);
}

int cmd_bounds(const Common& c, const std::string& spec, long n, std::optional<long> crossing, std::optional<long> g4) {
  const auto k = cli::KnotSpec::parse(spec);
  const auto rep = bound_report(k.load(), n, crossing, g4);
  Record r;
  r.set("knot", k.text).set("slope", n);
  r.set("lower_signature", rep.lower_signature);
  if (rep.lower_slice_genus) r.set("g4", *g4).set("lower_slice_genus", *rep.lower_slice_genus);
  if (rep.lower_crossing) r.set("crossing", *crossing).set("lower_crossing", *rep.lower_crossing);
  if (rep.upper) r.set("upper", *rep.upper);
  r.set("best_lower", rep.best_lower).set("vacuous", vacuous(rep.best_lower));
  r.set("denominator", PublishedConstants::denominator).set("universal_rho_constant", PublishedConstants::universal);
  cli::Emitter out(cli::parse_format(c.format), std::cout);
  out.emit(r);
  return cli::ok;
}

int cmd_gap(const Common& c, long d, long n_max) {
  require(d > 1, ErrorKind::hypothesis_violation, "gap table needs d > 1, got " + std::to_string(d));
  require(n_max >= 3, ErrorKind::hypothesis_violation, "gap table needs --n-max >= 3, got " + std::to_string(n_max));
  const auto fmt = cli::parse_format(c.format);
  cli::Emitter out(fmt, std::cout);
  for (long n = 3; n <= n_max; ++n) {
    const SignatureFunction sf(jn_seifert(n));
    out.emit(Record()
                 .set("n", n)
                 .set("d", d)
                 .set("avg_sig", sf.average(d).value)
                 .set("thmB_lower", lower_bound_signature(sf, d))
                 .set("gap_lower", gap_lower_bound(n, d)));
  }
  return cli::ok;
}

int cmd_slope(const Common& c, long p, long q, double m_re, double m_im, double l) {
  const CuspData cusp({m_re, m_im}, l);
  const double len = slope_length(cusp, p, q);
  cli::Emitter out(cli::parse_format(c.format), std::cout);
  out.emit(Record().set("p", p).set("q", q).set("length", len).set("exceeds_two_pi", len > PublishedConstants::two_pi));
  return cli::ok;
}

int cmd_verify(const Common& c, const std::string& suite, std::optional<long> n_max, std::optional<long> d_max) {
  std::vector<verify::CheckResult> results;
  const bool all = suite == "all";
  if (all || suite == "litherland") results.push_back(verify::litherland(n_max.value_or(30), d_max.value_or(60)));
  if (all || suite == "gilmer") results.push_back(verify::gilmer(n_max.value_or(30)));
  if (all || suite == "bounds") results.push_back(verify::bounds(n_max.value_or(10000)));
  if (all || suite == "gap") results.push_back(verify::gap(n_max.value_or(40), d_max.value_or(12)));
  require(!results.empty(), ErrorKind::parse_error, "unknown suite '" + suite + "'");
  bool ok = true;
  cli::Emitter out(cli::parse_format(c.format), std::cout);
  for (const auto& r : results) {
    ok = ok && r.passed;
    out.emit(Record().set("check", r.name).set("result", r.passed ? "PASS" : "FAIL").set("cases", r.cases).set("detail", r.detail));
  }
  out.finish();
  return ok ? cli::ok : cli::verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotcx: signatures, rho invariants and complexity bounds for Dehn surgeries"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--mode", common.mode, "exact | float (default from RHO_MODE, else exact)");
    sub->add_flag("--require-certified", common.require_certified, "exit 3 when a float result is not certified");
  };

  std::string spec, omega, suite;
  long n = 0, d = 0, p = 0, q = 0;
  std::optional<long> crossing, g4, n_max, d_max;
  long gap_n_max = 0;
  bool levels = false;
  double m_re = PublishedConstants::meridian_re, m_im = PublishedConstants::meridian_im, l = PublishedConstants::longitude;
  std::function<int()> run;

  auto* sig = app.add_subcommand("sig", "Levine-Tristram signature at a root of unity");
  sig->add_option("knot", spec, "unknot | torus2:<n> | jn:<n> | file:<path>")->required();
  sig->add_option("--omega", omega, "k/d")->required();
  add_common(sig);
  sig->callback([&] { run = [&] { return cmd_sig(common, spec, omega); }; });

  auto* avg = app.add_subcommand("avg-sig", "averaged signature over the nontrivial d-th roots");
  avg->add_option("knot", spec)->required();
  avg->add_option("--d", d)->required();
  add_common(avg);
  avg->callback([&] { run = [&] { return cmd_avg(common, spec, d); }; });

  auto* rho = app.add_subcommand("rho", "rho invariant of n-surgery with the abelianization onto Z_|n|");
  rho->add_option("knot", spec)->required();
  rho->add_option("--slope", n)->required();
  rho->add_flag("--levels", levels, "also print the Casson-Gordon sigma_k");
  add_common(rho);
  rho->callback([&] { run = [&] { return cmd_rho(common, spec, n, levels); }; });

  auto* bnd = app.add_subcommand("bounds", "complexity bounds for n-surgery");
  bnd->add_option("knot", spec)->required();
  bnd->add_option("--slope", n)->required();
  bnd->add_option("--crossing", crossing, "crossing number of the knot");
  bnd->add_option("--g4", g4, "slice genus of the knot");
  add_common(bnd);
  bnd->callback([&] { run = [&] { return cmd_bounds(common, spec, n, crossing, g4); }; });

  auto* gap = app.add_subcommand("gap-table", "complexity minus Gromov norm, one row per n from 3");
  gap->add_option("--d", d)->required();
  gap->add_option("--n-max", gap_n_max)->required();
  add_common(gap);
  gap->callback([&] { run = [&] { return cmd_gap(common, d, gap_n_max); }; });

  auto* slope = app.add_subcommand("slope-length", "length of the slope p m + q l on a cusp");
  slope->add_option("--p", p)->required();
  slope->add_option("--q", q)->required();
  slope->add_option("--meridian-re", m_re);
  slope->add_option("--meridian-im", m_im);
  slope->add_option("--longitude", l);
  add_common(slope);
  slope->callback([&] { run = [&] { return cmd_slope(common, p, q, m_re, m_im, l); }; });

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "litherland | gilmer | bounds | gap | all")
      ->required()
      ->check(CLI::IsMember({"litherland", "gilmer", "bounds", "gap", "all"}));
  ver->add_option("--n-max", n_max);
  ver->add_option("--d-max", d_max);
  add_common(ver);
  ver->callback([&] { run = [&] { return cmd_verify(common, suite, n_max, d_max); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::invalid_input;
  }

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::verify_failed;
  }
}

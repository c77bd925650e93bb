#include "thetalab/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "thetalab/decomp/decomposition.hpp"
#include "thetalab/f2/klein.hpp"
#include "thetalab/lattice/polarization.hpp"
#include "thetalab/theta/sampling.hpp"
#include "thetalab/theta/surface.hpp"

namespace thetalab::cli {

using theta::cplx;
using theta::PeriodMatrix;

namespace {

// Thresholds for the analytic checks (relative to the local envelope).
constexpr double kParityTol = 1e-9;
constexpr double kRatioSpreadTol = 1e-8;
constexpr double kSeparationMin = 1e4;
constexpr double kMinusOneTol = 1e-8;
constexpr double kComponentZeroTol = 1e-10;
constexpr double kGradientFloor = 1e-6;

std::string fmt_c(cplx z) {
  return fmt::format("{}{}{}i", format_double(z.real()), z.imag() < 0 ? "-" : "+",
                     format_double(std::abs(z.imag())));
}

std::string fmt_z(const PeriodMatrix& Z) {
  return fmt::format("Z = [[{}, {}], [{}, {}]]", fmt_c(Z.z11), fmt_c(Z.z12), fmt_c(Z.z12),
                     fmt_c(Z.z22));
}

theta::EvalSettings settings(const RunConfig& cfg) {
  theta::EvalSettings s;
  s.tol = cfg.tol;
  return s;
}

void scan_table(Report& r, const std::vector<theta::TorsionRecord>& scan, std::string title) {
  Table t{std::move(title), {"index", "alpha", "beta", "abs_theta", "grad_norm", "class"}, {}};
  for (std::size_t i = 0; i < scan.size(); ++i) {
    const auto& rec = scan[i];
    t.rows.push_back({std::to_string(i), fmt::format("({},{})", rec.alpha[0], rec.alpha[1]),
                      fmt::format("({},{})", rec.beta[0], rec.beta[1]), format_double(rec.abs_theta),
                      format_double(rec.grad_norm), theta::to_string(rec.classification)});
  }
  r.tables.push_back(std::move(t));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(fmt::format("cannot read '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Input parsing

cplx parse_complex(std::string_view text) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  std::cmatch m;
  const std::string s(text);
  if (s.empty() || !std::regex_match(s.c_str(), m, re) || (!m[1].matched && !m[2].matched))
    throw InvalidInput(fmt::format("'{}' is not a complex literal of the form a+bi", s));
  double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im_part = 0.0;
  if (m[2].matched) {
    im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im_part = -im_part;
  }
  return {re_part, im_part};
}

PeriodMatrix parse_period_matrix(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(fmt::format("period matrix is not valid JSON: {}", e.what()));
  }
  auto entry = [&](const char* part, int r, int c) {
    if (!j.is_object() || !j.contains(part) || !j[part].is_array() || j[part].size() != 2)
      throw InvalidInput(fmt::format("period matrix needs a 2x2 array \"{}\"", part));
    const auto& row = j[part][r];
    if (!row.is_array() || row.size() != 2 || !row[c].is_number())
      throw InvalidInput(fmt::format("\"{}\" must be a 2x2 array of numbers", part));
    return row[c].get<double>();
  };
  PeriodMatrix Z{{entry("re", 0, 0), entry("im", 0, 0)},
                 {entry("re", 0, 1), entry("im", 0, 1)},
                 {entry("re", 1, 1), entry("im", 1, 1)}};
  Z.require_siegel();
  return Z;
}

double resolve_tol(std::optional<double> flag, const char* env_value) {
  double tol = kDefaultTol;
  if (flag) {
    tol = *flag;
  } else if (env_value && *env_value) {
    char* end = nullptr;
    tol = std::strtod(env_value, &end);
    if (end == env_value || *end != '\0')
      throw InvalidInput(fmt::format("{}='{}' is not a number", kTolEnv, env_value));
  }
  if (!(tol > 0) || !std::isfinite(tol)) throw InvalidInput("tolerance must be positive");
  return tol;
}

// ---------------------------------------------------------------------------
// Commands

Report cmd_verify_surface(const RunConfig& cfg, const PeriodMatrix& Z) {
  Z.require_siegel();
  Report r;
  r.command = cfg.command;
  r.seed = cfg.seed;
  const auto s = settings(cfg);
  theta::ThetaEvaluator ev(Z, s);
  r.lines.push_back(fmt_z(Z));
  r.lines.push_back(fmt::format("truncation radius: value {} gradient {}", ev.value_radius(),
                                ev.gradient_radius()));

  const auto parity = theta::parity_check(Z, s, cfg.samples, cfg.seed);
  r.check("theta_A(v) + theta_A(-v) = 0", parity.odd_residual < kParityTol, parity.odd_residual,
          fmt::format("{} points", parity.samples));
  r.check("theta[w](-v) = theta[3w](v)", parity.basis_residual < kParityTol, parity.basis_residual,
          fmt::format("{} points", parity.samples));

  const auto scan = theta::two_torsion_scan(Z, s);
  const auto sum = theta::summarize(scan);
  r.lines.push_back(fmt::format("2-torsion: OddVanishing={} EvenVanishing={} NonVanishing={}",
                                sum.odd_vanishing, sum.even_vanishing, sum.non_vanishing));
  r.check("twelve odd 2-torsion zeros", sum.odd_vanishing == 12 && sum.non_vanishing == 4,
          std::nullopt,
          fmt::format("odd {} even {} non {}", sum.odd_vanishing, sum.even_vanishing,
                      sum.non_vanishing));
  r.check("separation ratio", sum.separation_ratio() >= kSeparationMin, sum.separation_ratio(),
          fmt::format(">= {}", format_double(kSeparationMin)));
  scan_table(r, scan, "2-torsion scan");

  const auto qp = theta::quasi_periodicity_check(Z, s, cfg.samples, cfg.seed);
  const cplx M_closed = theta::w2_constant(Z);
  r.lines.push_back(fmt::format("M(Z) = {} (|M| = {})", fmt_c(qp.M), format_double(std::abs(qp.M))));
  // The bare ratio theta_A(v + w2)/theta_A(v) carries exp(-pi i v2); reported, not checked.
  r.lines.push_back(fmt::format("unnormalized w2 ratio spread: {}", format_double(qp.raw_ratio_spread)));
  r.check("theta_A(v + w1) = -theta_A(v)", qp.w1_residual < kParityTol, qp.w1_residual,
          fmt::format("{} admissible of {}", qp.admissible, qp.samples));
  r.check("exp(pi i v2) theta_A(v + w2) / theta_A(v) constant", qp.M_spread < kRatioSpreadTol,
          qp.M_spread);
  r.check("M(Z) nonzero and equal to -exp(-pi i z22/4)",
          std::abs(qp.M) > 0 && std::abs(qp.M - M_closed) < kRatioSpreadTol * std::abs(M_closed),
          std::abs(qp.M - M_closed));
  r.check("w1 + w2 acts by a constant", qp.w12_spread < kRatioSpreadTol, qp.w12_spread);
  r.check("lattice automorphy", qp.automorphy_residual < kParityTol, qp.automorphy_residual);

  const auto act = theta::minus_one_action(Z, s, 16, cfg.seed);
  r.check("(-1)-action is the permutation (1 3)", act.residual < kMinusOneTol, act.residual);
  r.check("anti-invariant space has dimension 1", act.minus_dimension == 1, std::nullopt,
          fmt::format("plus {} minus {}", act.plus_dimension, act.minus_dimension));
  return r;
}

Report cmd_product_case(const RunConfig& cfg, cplx tau1, cplx tau2) {
  if (!(tau1.imag() > 0) || !(tau2.imag() > 0))
    throw InvalidInput("tau1 and tau2 must lie in the upper half-plane");
  Report r;
  r.command = cfg.command;
  r.seed = cfg.seed;
  const auto rep =
      theta::product_case_components(tau1, tau2, settings(cfg), cfg.samples, cfg.seed, kComponentZeroTol);
  r.lines.push_back(fmt::format("tau1 = {}, tau2 = {}", fmt_c(tau1), fmt_c(tau2)));
  for (const auto& c : rep.components) {
    r.check(fmt::format("component {}", c.label), c.passed, c.max_abs_theta,
            fmt::format("{} points", c.samples));
  }
  r.check("negative controls off the components", rep.negative_passed, rep.min_negative_ratio,
          fmt::format("{} points, min |theta_A|/envelope", rep.negative_samples));
  const auto sum = theta::summarize(rep.scan);
  r.lines.push_back(fmt::format("2-torsion: multiplicity-one={} node-type={}", sum.odd_vanishing,
                                sum.even_vanishing));
  r.check("12 multiplicity-one and 4 node-type 2-torsion points",
          sum.odd_vanishing == 12 && sum.even_vanishing == 4, std::nullopt,
          fmt::format("odd {} even {} non {}", sum.odd_vanishing, sum.even_vanishing,
                      sum.non_vanishing));
  scan_table(r, rep.scan, "2-torsion scan");

  Table t{"translates by E[2] x {0}", {"shift", "odd", "even", "nodes"}, {}};
  for (const auto& tr : rep.translates) {
    std::vector<std::string> idx;
    for (int i : tr.node_indices) idx.push_back(std::to_string(i));
    t.rows.push_back({fmt::format("({}, {})", fmt_c(tr.shift.v1), fmt_c(tr.shift.v2)),
                      std::to_string(tr.odd_vanishing), std::to_string(tr.even_vanishing),
                      fmt::format("{}", fmt::join(idx, " "))});
  }
  r.tables.push_back(std::move(t));
  r.check("four translates with distinct node sets", rep.translates_distinct && rep.translates.size() == 4,
          std::nullopt, fmt::format("{} translates", rep.translates.size()));
  return r;
}

Report cmd_klein(const RunConfig& cfg, int genus, KleinAction action,
                 const std::vector<std::string>& classes) {
  Report r;
  r.command = cfg.command;
  if (genus < 2) throw InvalidInput("genus must be at least 2");
  auto parse = [&](const std::string& s) {
    try {
      return f2::parse_class(genus, s);
    } catch (const f2::OddCardinality& e) {
      throw InvalidInput(fmt::format("'{}': {}", s, e.what()));
    } catch (const f2::OutOfRange& e) {
      throw InvalidInput(fmt::format("'{}': {}", s, e.what()));
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(fmt::format("'{}': {}", s, e.what()));
    }
  };

  if (action == KleinAction::enumerate) {
    f2::KleinCensus c;
    try {
      c = f2::enumerate_klein(genus);
    } catch (const f2::TooLarge& e) {
      throw InvalidInput(e.what());
    }
    r.lines.push_back(fmt::format("total={} isotropic={} non-isotropic={}", c.total, c.isotropic,
                                  c.non_isotropic));
    r.lines.push_back(fmt::format("hyperelliptic={} not-hyperelliptic={} undetermined={}",
                                  c.hyperelliptic, c.not_hyperelliptic, c.undetermined));
    const long gauss = f2::gaussian_binomial2(2 * genus, 2);
    r.check("total equals Gaussian binomial [2g choose 2]_2", c.total == gauss, std::nullopt,
            fmt::format("{} vs {}", c.total, gauss));
    if (genus == 2) {
      r.check("non-isotropic count equals C(6,3) = 20", c.non_isotropic == 20, std::nullopt,
              std::to_string(c.non_isotropic));
      r.check("g=2: hyperelliptic exactly when non-isotropic",
              c.hyperelliptic == c.non_isotropic && c.undetermined == 0, std::nullopt, "");
    }
    return r;
  }

  if (classes.size() != 2) throw InvalidInput("expected two classes");
  const auto eta1 = parse(classes[0]), eta2 = parse(classes[1]);
  std::optional<f2::KleinSubgroup> G;
  try {
    G.emplace(eta1, eta2);
  } catch (const f2::NotKlein& e) {
    throw InvalidInput(e.what());
  }

  if (action == KleinAction::classify) {
    const auto v = f2::classify_klein_cover(*G);
    r.lines.push_back(fmt::format("{}: {}", G->str(), f2::to_string(v)));
    r.lines.push_back(fmt::format("e(eta1, eta2) = {} ({})", f2::weil(eta1, eta2),
                                  G->is_isotropic() ? "isotropic" : "non-isotropic"));
    std::vector<std::string> el;
    for (const auto& e : G->nonzero()) el.push_back(e.str());
    r.lines.push_back(fmt::format("nonzero elements: {}", fmt::join(el, " ")));
    return r;
  }

  const auto comp = f2::orthogonal_complement(*G);
  std::vector<std::string> basis;
  for (const auto& b : comp.basis()) basis.push_back(b.str());
  r.lines.push_back(fmt::format("complement of {}: <{}> (dimension {}, {})", G->str(),
                                fmt::join(basis, ","), comp.dimension(),
                                comp.is_isotropic() ? "isotropic" : "non-isotropic"));
  bool orth = true;
  for (const auto& x : comp.elements())
    for (const auto& e : G->nonzero()) orth = orth && f2::weil(x, e) == 0;
  r.check("complement pairs trivially with G", orth);
  r.check("dimension 2g - 2", comp.dimension() == 2 * genus - 2, std::nullopt,
          std::to_string(comp.dimension()));
  const auto back = f2::orthogonal_complement(comp);
  r.check("complement of complement is G",
          back == f2::Subspace(genus, {G->eta1(), G->eta2()}));
  return r;
}

Report cmd_decompose(const RunConfig& cfg) {
  Report r;
  r.command = cfg.command;
  const auto a = decomp::ActionData::genus_five();
  const auto d = decomp::assemble_decomposition(a);

  Table mult{"isotypic multiplicities", {"character (iota,sigma,tau)", "m", "dim"}, {}};
  for (const auto& chi : decomp::all_characters()) {
    mult.rows.push_back({chi.str(), std::to_string(d.multiplicities[chi.mask]),
                         std::to_string(d.multiplicities[chi.mask] / 2)});
  }
  r.tables.push_back(std::move(mult));

  auto add_presentation = [&](const decomp::DecompositionPresentation& p) {
    Table t{fmt::format("{} (genus {})", p.variety, p.total_dim), {"slot", "dim", "type", "character"}, {}};
    std::vector<std::string> terms;
    for (const auto& s : p.slots) {
      t.rows.push_back({s.label, std::to_string(s.dim), s.type_str(), s.character.str()});
      terms.push_back(fmt::format("{}^{}", s.label, s.type_str()));
    }
    r.lines.push_back(fmt::format("{} = {}", p.variety, fmt::join(terms, " + ")));
    r.tables.push_back(std::move(t));
  };
  add_presentation(d.jacobian);
  for (const auto& q : d.quotients) add_presentation(q);

  Table genera{"quotient genera", {"subgroup", "Riemann-Hurwitz", "character sum"}, {}};
  for (const auto& K : decomp::all_subgroups()) {
    genera.rows.push_back({K.name(), std::to_string(decomp::quotient_genus(a, K)),
                           std::to_string(decomp::character_sum_genus(d.multiplicities, K))});
  }
  r.tables.push_back(std::move(genera));

  for (const auto& c : decomp::validate_presentation(d, a).checks) r.check(c.name, c.passed, std::nullopt, c.detail);
  return r;
}

Report cmd_feasible_genera(const RunConfig& cfg, int g_max) {
  if (g_max < 2) throw InvalidInput("--max must be at least 2");
  Report r;
  r.command = cfg.command;
  const auto verdicts = lattice::feasible_genera(g_max);
  std::vector<std::string> feasible;
  Table t{"genera", {"genus", "feasible", "types", "reason"}, {}};
  bool bound_ok = true;
  for (const auto& v : verdicts) {
    std::vector<std::string> types;
    for (const auto& ty : v.types) {
      types.push_back(ty.type.str());
      if (ty.qualifies) feasible.push_back(fmt::format("{}:{}", v.genus, ty.type.str()));
    }
    // Weierstrass points land in A[2], which has 16 elements.
    if (v.feasible && 2 * v.genus + 2 > 16) bound_ok = false;
    t.rows.push_back({std::to_string(v.genus), v.feasible ? "yes" : "no",
                      fmt::format("{}", fmt::join(types, " ")), v.reason});
  }
  r.lines.push_back(fmt::format("{}", fmt::join(feasible, " ")));
  r.tables.push_back(std::move(t));
  r.check("feasible genera satisfy 2g+2 <= |A[2]| = 16", bound_ok);
  return r;
}

TraceOutput cmd_trace_curve(const RunConfig& cfg, const PeriodMatrix& Z, int grid) {
  if (grid < 2) throw InvalidInput("--grid must be at least 2");
  Z.require_siegel();
  TraceOutput out;
  Report& r = out.report;
  r.command = cfg.command;
  r.seed = cfg.seed;
  const auto tr = theta::trace_curve(Z, settings(cfg), grid);
  r.lines.push_back(fmt_z(Z));
  r.lines.push_back(fmt::format("lines={} points={} failed-lines={}", tr.lines, tr.points.size(),
                                tr.failures.size()));
  double max_abs = 0;
  for (const auto& p : tr.points) max_abs = std::max(max_abs, p.abs_theta);
  r.check("every line has a solution", tr.failures.empty(), double(tr.failures.size()));
  r.check("every point has |theta_A| < tol", !tr.points.empty() && max_abs < cfg.tol, max_abs);
  r.check("gradient nonvanishing along the curve", tr.min_grad_norm() > kGradientFloor,
          tr.points.empty() ? 0.0 : tr.min_grad_norm());

  std::string csv = "v1_re,v1_im,v2_re,v2_im,abs_theta,grad_norm\n";
  for (const auto& p : tr.points) {
    csv += fmt::format("{},{},{},{},{},{}\n", format_double(p.v.v1.real()), format_double(p.v.v1.imag()),
                       format_double(p.v.v2.real()), format_double(p.v.v2.imag()),
                       format_double(p.abs_theta), format_double(p.grad_norm));
  }
  out.csv = std::move(csv);
  return out;
}

// ---------------------------------------------------------------------------
// Driver

namespace {

void write_text(const std::optional<std::string>& path, const std::string& text, std::ostream& fallback) {
  if (!path) {
    fallback << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw InvalidInput(fmt::format("cannot write '{}'", *path));
  f << text;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::md;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus-2 theta functions, (1,4) surfaces and Klein coverings", "theta_lab"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  double tol_flag = 0;
  std::string format = "md";
  std::string output;
  int samples = 50;
  bool random = false;
  std::string pm_path;
  std::string tau1_s = "0+1i", tau2_s = "0+1i";
  int genus = 2;
  bool enumerate = false;
  std::vector<std::string> classify, complement;
  int g_max = 10;
  int grid = 16;

  std::vector<CLI::Option*> tol_opts;
  auto common = [&](CLI::App* sc) {
    sc->add_option("--seed", seed, "RNG seed");
    tol_opts.push_back(sc->add_option("--tol", tol_flag, "truncation tolerance (overrides THETA_LAB_TOL)"));
    sc->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv", "md"}));
    sc->add_option("--output", output, "write the report (trace-curve: the point cloud) here");
  };
  auto z_source = [&](CLI::App* sc) {
    auto* r = sc->add_flag("--random", random, "sample a random period matrix from --seed");
    auto* p = sc->add_option("--period-matrix", pm_path, "JSON file {\"re\": [[..]], \"im\": [[..]]}");
    r->excludes(p);
  };

  auto* verify = app.add_subcommand("verify-surface", "check the analytic claims about theta_A on one surface");
  common(verify);
  z_source(verify);
  verify->add_option("--samples", samples, "random points per check")->check(CLI::PositiveNumber);

  auto* product = app.add_subcommand("product-case", "components of {theta_A = 0} for Z = diag(tau1, tau2)");
  common(product);
  product->add_option("--tau1", tau1_s, "complex a+bi");
  product->add_option("--tau2", tau2_s, "complex a+bi");
  product->add_flag("--random", random, "sample tau1, tau2 from --seed");
  product->add_option("--samples", samples, "points per component")->check(CLI::PositiveNumber);

  auto* klein = app.add_subcommand("klein", "Klein subgroups of JH[2]");
  common(klein);
  klein->add_option("--genus", genus, "genus of H");
  auto* o_enum = klein->add_flag("--enumerate", enumerate, "census of all Klein subgroups");
  auto* o_class = klein->add_option("--classify", classify, "two classes, e.g. 1,2 1,3")->expected(2);
  auto* o_comp = klein->add_option("--complement", complement, "two classes")->expected(2);
  o_enum->excludes(o_class)->excludes(o_comp);
  o_class->excludes(o_comp);

  auto* decompose = app.add_subcommand("decompose", "isotypic decomposition of J C~");
  common(decompose);

  auto* feasible = app.add_subcommand("feasible-genera", "genera allowed for hyperelliptic curves on surfaces");
  common(feasible);
  feasible->add_option("--max", g_max, "largest genus");

  auto* trace = app.add_subcommand("trace-curve", "point cloud on {theta_A = 0}");
  common(trace);
  z_source(trace);
  trace->add_option("--grid", grid, "grid lines per direction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  {
    std::string echo = "theta_lab";
    for (int i = 1; i < argc; ++i) echo += fmt::format(" {}", argv[i]);
    cfg.command = echo;
  }
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.format = parse_format(format);
  if (!output.empty()) cfg.output_path = output;

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  try {
    bool tol_given = false;
    for (auto* o : tol_opts) tol_given = tol_given || o->count() > 0;
    cfg.tol = resolve_tol(tol_given ? std::optional<double>(tol_flag) : std::nullopt, std::getenv(kTolEnv));

    auto period_matrix = [&]() -> PeriodMatrix {
      if (random) {
        theta::Rng rng(cfg.seed);
        return theta::random_period_matrix(rng, true);
      }
      if (pm_path.empty()) throw InvalidInput("give --random or --period-matrix FILE");
      return parse_period_matrix(read_file(pm_path));
    };

    if (trace->parsed()) {
      auto res = cmd_trace_curve(cfg, period_matrix(), grid);
      res.report.wall_time_s = elapsed();
      write_text(cfg.output_path, res.csv, out);
      // The report goes beside the cloud: stdout if the cloud went to a file.
      (cfg.output_path ? out : err) << render(res.report, cfg.format);
      return res.report.passed() ? 0 : 1;
    }

    Report report;
    if (verify->parsed()) {
      report = cmd_verify_surface(cfg, period_matrix());
    } else if (product->parsed()) {
      cplx t1, t2;
      if (random) {
        theta::Rng rng(cfg.seed);
        t1 = theta::random_tau(rng);
        t2 = theta::random_tau(rng);
      } else {
        t1 = parse_complex(tau1_s);
        t2 = parse_complex(tau2_s);
      }
      report = cmd_product_case(cfg, t1, t2);
    } else if (klein->parsed()) {
      if (!classify.empty()) {
        report = cmd_klein(cfg, genus, KleinAction::classify, classify);
      } else if (!complement.empty()) {
        report = cmd_klein(cfg, genus, KleinAction::complement, complement);
      } else if (enumerate) {
        report = cmd_klein(cfg, genus, KleinAction::enumerate);
      } else {
        throw InvalidInput("klein needs --enumerate, --classify or --complement");
      }
    } else if (decompose->parsed()) {
      report = cmd_decompose(cfg);
    } else if (feasible->parsed()) {
      report = cmd_feasible_genera(cfg, g_max);
    }
    report.wall_time_s = elapsed();
    write_text(cfg.output_path, render(report, cfg.format), out);
    return report.passed() ? 0 : 1;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const theta::NotSiegel& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const thetalab::Error& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace thetalab::cli

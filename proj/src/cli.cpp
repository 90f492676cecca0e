#include "rauzy2/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rauzy2/io.hpp"

namespace rauzy2 {

namespace {

using nlohmann::json;

std::string format_of(const RunConfig& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

SignedPatch surface_seed(const CaseSpec& spec, System system) {
  if (system == System::tau || spec.delta_is_identity()) return seed(SeedKind::U, spec);
  return seed(SeedKind::U_tilde, spec);
}

std::string case_label(const CaseSpec& spec) { return "case " + to_string(spec.id) + ", a = " + std::to_string(spec.a); }

}  // namespace

std::string cmd_info(const CaseSpec& spec, const RunConfig& cfg) {
  EigenData ed = eigen_for(spec, System::sigma);
  RootBrackets b = family_brackets(spec.id, spec.a);
  std::string bracket_detail;
  bool brackets = brackets_hold(spec, &bracket_detail);
  CheckReport conj = verify_conjugacy(spec);
  SpectralPredicates sp = spectral_predicates(spec.sigma);
  const std::string fmt = format_of(cfg, "text");

  if (fmt == "json") {
    json j;
    j["case"] = to_string(spec.id);
    j["a"] = spec.a;
    auto endo = [](const Endomorphism& e) { return json{{"1", e.image1().to_string()}, {"2", e.image2().to_string()}}; };
    auto mat = [](const Mat2& m) { return json::array({json::array({m.a11, m.a12}), json::array({m.a21, m.a22})}); };
    j["sigma"] = endo(spec.sigma);
    j["tau"] = endo(spec.tau);
    j["delta"] = endo(spec.delta);
    j["delta_inv"] = endo(spec.delta_inv);
    j["delta_is_identity"] = spec.delta_is_identity();
    j["A_sigma"] = mat(incidence_matrix(spec.sigma));
    j["A_tau"] = mat(incidence_matrix(spec.tau));
    j["A_delta"] = mat(incidence_matrix(spec.delta));
    j["epsilon"] = {spec.epsilon[0], spec.epsilon[1]};
    j["power"] = spec.power;
    j["lambda"] = to_float(ed.lambda, 30);
    j["lambda_prime"] = to_float(ed.lambda_prime, 30);
    j["lambda_bracket"] = {b.lambda_lo, b.lambda_hi};
    j["lambda_prime_bracket"] = {b.prime_lo, b.prime_hi};
    j["brackets_hold"] = brackets;
    j["spectral"] = {{"pisot", sp.pisot}, {"irreducible", sp.irreducible}, {"unimodular", sp.unimodular},
                     {"hyperbolic", sp.hyperbolic}, {"primitive_or_neg_primitive", sp.primitive_or_neg_primitive}};
    json checks = json::array();
    for (const auto& c : conj.checks) checks.push_back({{"check", c.name}, {"passed", c.passed}});
    j["conjugacy"] = checks;
    json offsets;
    for (Letter sym : symbols(spec, System::sigma)) offsets[sym.to_string()] = to_float(conjugacy_offset(spec, sym), 30);
    j["conjugacy_offset"] = offsets;
    return j.dump(1) + "\n";
  }

  std::ostringstream os;
  os << case_label(spec) << "\n";
  os << "sigma     : " << spec.sigma.to_string() << "    A_sigma = " << incidence_matrix(spec.sigma).to_string() << "\n";
  os << "tau       : " << spec.tau.to_string() << "    A_tau = " << incidence_matrix(spec.tau).to_string() << "  ("
     << to_string(classify(spec.tau)) << ")\n";
  if (spec.delta_is_identity()) {
    os << "delta     : identity (sigma is a substitution and tau = sigma)\n";
  } else {
    os << "delta     : " << spec.delta.to_string() << "    A_delta = " << incidence_matrix(spec.delta).to_string() << "\n";
    os << "delta^-1  : " << spec.delta_inv.to_string() << "\n";
  }
  os << "epsilon   : (" << spec.epsilon[0] << ", " << spec.epsilon[1] << "), iteration step " << spec.power << "\n";
  os << "lambda    : " << to_float(ed.lambda, 12) << " in (" << b.lambda_lo << ", " << b.lambda_hi << ")\n";
  os << "lambda'   : " << to_float(ed.lambda_prime, 12) << " in (" << b.prime_lo << ", " << b.prime_hi << ")\n";
  os << "brackets  : " << (brackets ? "hold" : "VIOLATED") << "\n";
  os << "spectral  : hyperbolic " << yes_no(sp.hyperbolic) << ", unimodular " << yes_no(sp.unimodular)
     << ", irreducible " << yes_no(sp.irreducible) << ", pisot " << yes_no(sp.pisot) << "\n";
  for (Letter sym : symbols(spec, System::sigma))
    os << "offset h  : A_delta X_sigma^(" << sym.to_string() << ") = pi_tau (delta^-1)*(seed) + "
       << to_float(conjugacy_offset(spec, sym), 12) << "\n";
  for (const auto& c : conj.checks) os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
  return os.str();
}

std::string cmd_surface(const CaseSpec& spec, const RunConfig& cfg) {
  System system = parse_system(cfg.which);
  unsigned n = cfg.n.value_or(6);
  SignedPatch p = iterate_dual(spec, system == System::sigma ? DualWhich::sigma : DualWhich::tau,
                               surface_seed(spec, system), n);
  EigenData ed = eigen_for(spec, system);
  SurfaceConvention conv = surface_convention(spec, system);
  const std::string fmt = format_of(cfg, "svg");
  if (fmt == "json") return emit_json(make_patch_document(spec, n, p));
  if (fmt == "svg") {
    std::string title = to_string(system) + "*^" + std::to_string(n) + " of the seed, " + case_label(spec);
    return render_patch_svg(p, ed, conv, title);
  }
  std::int64_t R = cfg.radius;
  SignedPatch oracle = oriented_surface(spec, system, R).window(R - 1);
  SignedPatch win = p.window(R - 1);
  std::size_t missing = 0, extra = 0;
  for (const auto& [seg, c] : oracle)
    if (win.coefficient(seg) != c) ++missing;
  for (const auto& [seg, c] : win)
    if (oracle.coefficient(seg) != c) ++extra;
  std::ostringstream os;
  os << case_label(spec) << ", " << to_string(system) << "*^" << n << "\n";
  os << "segments        : " << p.size() << "\n";
  os << "on surface (S)  : " << yes_no(patch_in_G(p, ed, conv)) << "\n";
  os << "connected       : " << yes_no(connected(p)) << "\n";
  os << "oracle window   : radius " << R << ", " << oracle.size() << " surface segments, " << missing << " missing, "
     << extra << " extra\n";
  return os.str();
}

std::string cmd_fractal(const CaseSpec& spec, const RunConfig& cfg) {
  System system = parse_system(cfg.which);
  unsigned n = cfg.n.value_or(12);
  Rational tol = parse_decimal(cfg.tol);
  if (tol <= 0) throw ParameterError("--tol must be positive");
  PartitionSpec part = build_partition(spec, system, tol);
  auto syms = symbols(spec, system);
  std::vector<std::pair<Letter, Interval>> approx;
  for (Letter s : syms) approx.emplace_back(s, approx_fractal(spec, FractalTarget::piece(system, s), n).hull());

  const std::string fmt = format_of(cfg, "svg");
  if (fmt == "json") {
    IntervalDocument doc;
    doc.case_id = to_string(spec.id);
    doc.a = spec.a;
    doc.n = n;
    doc.system = to_string(system);
    for (const auto& [s, iv] : approx) doc.intervals.push_back(make_interval_entry(iv, s.to_string()));
    for (const auto& pc : part.pieces) doc.intervals.push_back(make_interval_entry(pc.interval, pc.symbol.to_string()));
    return emit_json(doc);
  }
  if (fmt == "text") {
    std::ostringstream os;
    os << case_label(spec) << ", " << to_string(system) << " fractal\n";
    for (const auto& [s, iv] : approx)
      os << "level " << n << " X^(" << s.to_string() << ") = [" << to_float(iv.lo, 12) << ", " << to_float(iv.hi, 12)
         << "] +- " << to_float(iv.error, 3) << "\n";
    for (const auto& pc : part.pieces)
      os << "exact X^(" << pc.symbol.to_string() << ") = [" << to_float(pc.interval.lo, 12) << ", "
         << to_float(pc.interval.hi, 12) << "], translation " << to_float(pc.shift, 12) << "\n";
    return os.str();
  }

  auto color = [](Letter s) { return s.generator() - 1; };
  std::vector<BarRow> rows;
  BarRow level{"level " + std::to_string(n) + " approximations", {}};
  for (const auto& [s, iv] : approx) level.bars.push_back({iv.lo.to_double(), iv.hi.to_double(), s.to_string(), color(s)});
  rows.push_back(level);
  BarRow pieces{"pieces X^(i)", {}};
  BarRow image{"exchanged image T(X^(i))", {}};
  for (const auto& pc : part.pieces) {
    pieces.bars.push_back({pc.interval.lo.to_double(), pc.interval.hi.to_double(), pc.symbol.to_string(), color(pc.symbol)});
    Interval t = pc.interval.translated(pc.shift);
    image.bars.push_back({t.lo.to_double(), t.hi.to_double(), pc.symbol.to_string(), color(pc.symbol)});
  }
  rows.push_back(pieces);
  if (system == System::sigma && !spec.delta_is_identity()) {
    PartitionSpec tau_part = build_partition(spec, System::tau, tol);
    QuadNum kappa = change_of_basis(spec);
    EigenData es = eigen_for(spec, System::sigma);
    BarRow overlay{"conjugated tau pieces A_delta^-1 X_tau^(j)", {}};
    BarRow decomposition{"decomposition by delta^-1(j)", {}};
    for (const auto& pc : tau_part.pieces) {
      Interval s = pc.interval.scaled(kappa);
      int j = pc.symbol.generator();
      overlay.bars.push_back({s.lo.to_double(), s.hi.to_double(), "j=" + std::to_string(j), 2 + j - 1});
      const auto& w = spec.delta_inv.image(j).letters();
      for (std::size_t k = 0; k < w.size(); ++k) {
        Vec2 fp = abelianize(std::vector<Letter>(w.begin(), w.begin() + static_cast<long>(k)));
        Interval m = s.translated(-es.line_form.value(fp));
        decomposition.bars.push_back({m.lo.to_double(), m.hi.to_double(),
                                      w[k].to_string() + " (j=" + std::to_string(j) + ")", color(w[k])});
      }
    }
    rows.push_back(overlay);
    rows.push_back(decomposition);
  }
  rows.push_back(image);
  return render_bars_svg(rows, to_string(system) + " fractal, " + case_label(spec));
}

std::string cmd_verify(const RunConfig& cfg, bool& passed) {
  BatteryOptions opts;
  if (cfg.n) opts.surface_n = *cfg.n;
  opts.radius = cfg.radius;
  opts.tol = parse_decimal(cfg.tol);
  if (opts.tol <= 0) throw ParameterError("--tol must be positive");
  std::vector<CaseSpec> specs;
  if (cfg.all) {
    for (CaseId id : {CaseId::i, CaseId::ii, CaseId::iii, CaseId::iv}) specs.push_back(family(id, minimal_a(id)));
  } else {
    specs.push_back(family(parse_case(*cfg.case_id), *cfg.a));
  }
  passed = true;
  json results = json::array();
  std::ostringstream os;
  for (const auto& spec : specs) {
    CheckReport rep = verify_battery(spec, opts);
    passed = passed && rep.all_passed();
    for (const auto& c : rep.checks) {
      results.push_back({{"case", to_string(spec.id)}, {"a", spec.a}, {"check", c.name}, {"passed", c.passed},
                         {"detail", c.detail}});
      os << (c.passed ? "PASS  " : "FAIL  ") << "[" << to_string(spec.id) << ", a=" << spec.a << "] " << c.name;
      if (!c.detail.empty()) os << "  (" << c.detail << ")";
      os << "\n";
    }
  }
  if (format_of(cfg, "text") == "json") {
    json j;
    j["passed"] = passed;
    j["results"] = results;
    return j.dump(1) + "\n";
  }
  os << (passed ? "all checks passed\n" : "some checks FAILED\n");
  return os.str();
}

CommandResult run_command(const RunConfig& cfg) {
  CommandResult res;
  try {
    if (!cfg.format.empty() && cfg.format != "json" && cfg.format != "svg" && cfg.format != "text")
      throw ParameterError("--format must be json, svg or text");
    if (cfg.which != "sigma" && cfg.which != "tau") throw ParameterError("--which must be sigma or tau");
    if (cfg.radius < 1) throw ParameterError("--radius must be at least 1");
    if (cfg.command == "verify") {
      if (!cfg.all && (!cfg.case_id || !cfg.a)) throw ParameterError("verify needs --case and --a, or --all");
      if (cfg.format == "svg") throw ParameterError("verify reports text or json");
      bool passed = false;
      res.output = cmd_verify(cfg, passed);
      res.exit_code = passed ? kExitPass : kExitVerifyFailed;
      return res;
    }
    if (!cfg.case_id || !cfg.a) throw ParameterError(cfg.command + " needs --case and --a");
    CaseSpec spec = family(parse_case(*cfg.case_id), *cfg.a);
    if (cfg.command == "info") {
      if (cfg.format == "svg") throw ParameterError("info reports text or json");
      res.output = cmd_info(spec, cfg);
    } else if (cfg.command == "surface") {
      res.output = cmd_surface(spec, cfg);
    } else if (cfg.command == "fractal") {
      res.output = cmd_fractal(spec, cfg);
    } else {
      throw ParameterError("unknown command '" + cfg.command + "'");
    }
    res.exit_code = kExitPass;
  } catch (const ResourceError& e) {
    res.exit_code = kExitResource;
    res.error = e.what();
  } catch (const ParameterError& e) {
    res.exit_code = kExitUsage;
    res.error = e.what();
  } catch (const PreconditionError& e) {
    res.exit_code = kExitUsage;
    res.error = e.what();
  } catch (const PositionError& e) {
    res.exit_code = kExitUsage;
    res.error = e.what();
  } catch (const SpectralError& e) {
    res.exit_code = kExitUsage;
    res.error = e.what();
  } catch (const std::exception& e) {
    res.exit_code = kExitVerifyFailed;
    res.error = e.what();
  }
  return res;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"rauzy2: Rauzy fractals and stepped surfaces of hyperbolic rank-two free group automorphisms"};
  RunConfig cfg;
  std::string case_id;
  long a = 0;
  unsigned n = 0;
  app.add_option("--case", case_id, "family: i, ii, iii or iv");
  app.add_option("--a", a, "family parameter");
  app.add_option("--n", n, "number of dual iterations / approximation level");
  app.add_option("--radius", cfg.radius, "window radius for surface comparisons")->capture_default_str();
  app.add_option("--tol", cfg.tol, "tolerance for certified limits")->capture_default_str();
  app.add_option("--which", cfg.which, "system: sigma or tau")->capture_default_str();
  app.add_option("--format", cfg.format, "output format: json, svg or text");
  app.add_option("--out", cfg.out, "output file (default: standard output)");
  app.require_subcommand(1, 1);
  for (const char* name : {"info", "surface", "fractal", "verify"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    if (std::string(name) == "verify") sub->add_flag("--all", cfg.all, "sweep the four cases at minimal |a|");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (app.count("--case")) cfg.case_id = case_id;
  if (app.count("--a")) cfg.a = a;
  if (app.count("--n")) cfg.n = n;

  CommandResult res = run_command(cfg);
  if (!res.error.empty()) std::cerr << "rauzy2: " << res.error << "\n";
  if (!res.output.empty()) {
    if (cfg.out.empty()) {
      std::cout << res.output;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) {
        std::cerr << "rauzy2: cannot write " << cfg.out << "\n";
        return kExitUsage;
      }
      f << res.output;
    }
  }
  return res.exit_code;
}

}  // namespace rauzy2

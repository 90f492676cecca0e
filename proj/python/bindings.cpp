#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rauzy2/cli.hpp"
#include "rauzy2/io.hpp"

namespace py = pybind11;
using namespace rauzy2;

namespace {

using SegmentTuple = std::tuple<std::int64_t, std::int64_t, int, std::int64_t>;

std::vector<SegmentTuple> to_tuples(const SignedPatch& p) {
  std::vector<SegmentTuple> r;
  r.reserve(p.size());
  for (const auto& [s, c] : p) r.emplace_back(s.x.x1, s.x.x2, s.star, c);
  return r;
}

CaseSpec case_of(const std::string& id, long a) { return family(parse_case(id), a); }

py::dict interval_dict(const Interval& iv) {
  py::dict d;
  d["lo"] = iv.lo.to_double();
  d["hi"] = iv.hi.to_double();
  d["error"] = iv.error.to_double();
  d["lo_exact"] = iv.lo.to_string();
  d["hi_exact"] = iv.hi.to_string();
  return d;
}

FractalTarget target_of(const CaseSpec& spec, const std::string& system, std::optional<int> symbol) {
  System sys = parse_system(system);
  if (!symbol) return FractalTarget::whole(sys);
  FractalTarget t = FractalTarget::piece(sys, Letter::parse(*symbol));
  validate_target(spec, t);
  return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact free-group words, tiling substitutions and interval fractals";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  m.def("reduce", [](const std::string& w) { return ReducedWord::parse(w).to_string(); }, py::arg("word"));
  m.def(
      "apply",
      [](const std::string& img1, const std::string& img2, const std::string& w) {
        return apply_endo(Endomorphism::parse(img1, img2), ReducedWord::parse(w)).to_string();
      },
      py::arg("image1"), py::arg("image2"), py::arg("word"));
  m.def(
      "incidence_matrix",
      [](const std::string& img1, const std::string& img2) {
        Mat2 a = incidence_matrix(Endomorphism::parse(img1, img2));
        return std::vector<std::vector<std::int64_t>>{{a.a11, a.a12}, {a.a21, a.a22}};
      },
      py::arg("image1"), py::arg("image2"));

  m.def(
      "family",
      [](const std::string& id, long a) {
        CaseSpec s = case_of(id, a);
        auto images = [](const Endomorphism& e) { return std::make_pair(e.image1().to_string(), e.image2().to_string()); };
        py::dict d;
        d["case"] = to_string(s.id);
        d["a"] = s.a;
        d["power"] = s.power;
        d["epsilon"] = std::make_pair(s.epsilon[0], s.epsilon[1]);
        d["sigma"] = images(s.sigma);
        d["tau"] = images(s.tau);
        d["delta"] = images(s.delta);
        d["delta_inv"] = images(s.delta_inv);
        return d;
      },
      py::arg("case"), py::arg("a"));
  m.def("minimal_a", [](const std::string& id) { return minimal_a(parse_case(id)); }, py::arg("case"));

  m.def(
      "dual_iterate",
      [](const std::string& id, long a, const std::string& which, unsigned n) {
        CaseSpec s = case_of(id, a);
        System sys = parse_system(which);
        SignedPatch start = sys == System::tau || s.delta_is_identity() ? seed(SeedKind::U, s) : seed(SeedKind::U_tilde, s);
        return to_tuples(iterate_dual(s, sys == System::sigma ? DualWhich::sigma : DualWhich::tau, start, n));
      },
      py::arg("case"), py::arg("a"), py::arg("which") = "sigma", py::arg("n") = 6,
      "Dual iterate of the standard seed as (x1, x2, star, coef) tuples.");
  m.def(
      "surface",
      [](const std::string& id, long a, const std::string& which, std::int64_t radius) {
        return to_tuples(oriented_surface(case_of(id, a), parse_system(which), radius));
      },
      py::arg("case"), py::arg("a"), py::arg("which") = "sigma", py::arg("radius") = 3,
      "Oriented stepped surface inside the window of the given radius.");

  m.def(
      "approx_fractal",
      [](const std::string& id, long a, const std::string& which, std::optional<int> symbol, unsigned n) {
        CaseSpec s = case_of(id, a);
        IntervalSet set = approx_fractal(s, target_of(s, which, symbol), n);
        py::list parts;
        for (const auto& iv : set.parts()) parts.append(interval_dict(iv));
        return parts;
      },
      py::arg("case"), py::arg("a"), py::arg("which") = "sigma", py::arg("symbol") = py::none(), py::arg("n") = 12);
  m.def(
      "exact_fractal",
      [](const std::string& id, long a, const std::string& which, std::optional<int> symbol) {
        CaseSpec s = case_of(id, a);
        return interval_dict(exact_fractal(s, target_of(s, which, symbol)));
      },
      py::arg("case"), py::arg("a"), py::arg("which") = "sigma", py::arg("symbol") = py::none());

  m.def(
      "verify",
      [](const std::string& id, long a) {
        CheckReport r = verify_battery(case_of(id, a), BatteryOptions{});
        std::vector<std::tuple<std::string, bool, std::string>> checks;
        for (const auto& c : r.checks) checks.emplace_back(c.name, c.passed, c.detail);
        return std::make_pair(r.all_passed(), checks);
      },
      py::arg("case"), py::arg("a"));

  m.def(
      "run",
      [](const std::string& command, std::optional<std::string> id, std::optional<long> a, std::optional<unsigned> n,
         const std::string& which, const std::string& format) {
        RunConfig cfg;
        cfg.command = command;
        cfg.case_id = std::move(id);
        cfg.a = a;
        cfg.n = n;
        cfg.which = which;
        cfg.format = format;
        CommandResult r = run_command(cfg);
        return std::make_tuple(r.exit_code, r.output, r.error);
      },
      py::arg("command"), py::arg("case") = py::none(), py::arg("a") = py::none(), py::arg("n") = py::none(),
      py::arg("which") = "sigma", py::arg("format") = "",
      "Run a CLI command in-process; returns (exit_code, output, error).");
}

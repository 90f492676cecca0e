#include "rauzy2/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace rauzy2 {

using nlohmann::json;

PatchDocument make_patch_document(const CaseSpec& spec, unsigned n, const SignedPatch& p) {
  PatchDocument d;
  d.case_id = to_string(spec.id);
  d.a = spec.a;
  d.n = n;
  for (const auto& [seg, c] : p) d.segments.push_back({seg.x.x1, seg.x.x2, seg.star, c});
  return d;
}

SignedPatch patch_from_document(const PatchDocument& doc) {
  std::vector<SignedPatch::Term> terms;
  for (const auto& e : doc.segments) {
    if (e.star != 1 && e.star != 2) throw ParameterError("segment star must be 1 or 2");
    terms.push_back({Segment{{e.x1, e.x2}, e.star}, e.coef});
  }
  return SignedPatch::from_terms(std::move(terms));
}

std::string emit_json(const PatchDocument& doc) {
  json j;
  j["case"] = doc.case_id;
  j["a"] = doc.a;
  j["n"] = doc.n;
  json segs = json::array();
  for (const auto& e : doc.segments) segs.push_back({{"x", {e.x1, e.x2}}, {"star", e.star}, {"coef", e.coef}});
  j["segments"] = segs;
  return j.dump(1) + "\n";
}

PatchDocument parse_patch_document(const std::string& text) {
  try {
    json j = json::parse(text);
    PatchDocument d;
    d.case_id = j.at("case").get<std::string>();
    d.a = j.at("a").get<long>();
    d.n = j.at("n").get<unsigned>();
    for (const auto& s : j.at("segments")) {
      const auto& x = s.at("x");
      d.segments.push_back({x.at(0).get<std::int64_t>(), x.at(1).get<std::int64_t>(), s.at("star").get<int>(),
                            s.at("coef").get<std::int64_t>()});
    }
    return d;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed patch document: ") + e.what());
  }
}

IntervalDocument::Entry make_interval_entry(const Interval& iv, const std::string& symbol) {
  return {to_float(iv.lo, kDocumentDigits), to_float(iv.hi, kDocumentDigits), symbol,
          to_float(iv.error, kDocumentDigits), iv.exact() ? "exact" : "approx"};
}

std::string emit_json(const IntervalDocument& doc) {
  json j;
  j["case"] = doc.case_id;
  j["a"] = doc.a;
  j["n"] = doc.n;
  j["system"] = doc.system;
  json arr = json::array();
  for (const auto& e : doc.intervals)
    arr.push_back({{"lo", e.lo}, {"hi", e.hi}, {"symbol", e.symbol}, {"error_bound", e.error_bound}, {"kind", e.kind}});
  j["intervals"] = arr;
  return j.dump(1) + "\n";
}

IntervalDocument parse_interval_document(const std::string& text) {
  try {
    json j = json::parse(text);
    IntervalDocument d;
    d.case_id = j.at("case").get<std::string>();
    d.a = j.at("a").get<long>();
    d.n = j.at("n").get<unsigned>();
    d.system = j.at("system").get<std::string>();
    for (const auto& e : j.at("intervals"))
      d.intervals.push_back({e.at("lo").get<std::string>(), e.at("hi").get<std::string>(),
                             e.at("symbol").get<std::string>(), e.at("error_bound").get<std::string>(),
                             e.value("kind", std::string("approx"))});
    return d;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed interval document: ") + e.what());
  }
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

const char* kPalette[] = {"#4477aa", "#cc6677", "#228833", "#ccbb44", "#66ccee", "#aa3377"};

}  // namespace

std::string render_patch_svg(const SignedPatch& p, const EigenData& ed, const SurfaceConvention& conv,
                             const std::string& title, const SvgStyle& style) {
  std::int64_t xmin = conv.translate.x1, xmax = conv.translate.x1;
  std::int64_t ymin = conv.translate.x2, ymax = conv.translate.x2;
  for (const auto& [seg, c] : p)
    for (Vec2 v : {seg.tail(), seg.head()}) {
      xmin = std::min(xmin, v.x1);
      xmax = std::max(xmax, v.x1);
      ymin = std::min(ymin, v.x2);
      ymax = std::max(ymax, v.x2);
    }
  const double m = style.margin, u = style.unit;
  const double width = (static_cast<double>(xmax - xmin) + 2 * m) * u;
  const double height = (static_cast<double>(ymax - ymin) + 2 * m) * u;
  auto X = [&](double x) { return (x - static_cast<double>(xmin) + m) * u; };
  auto Y = [&](double y) { return (static_cast<double>(ymax) + m - y) * u; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  os << "<title>" << escape(title) << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"white\"/>\n";

  // Contractive line: points x with <x - translate, v> = 0.
  double v1 = ed.v_row[0].to_double(), v2 = ed.v_row[1].to_double();
  double norm = std::hypot(v1, v2);
  double dx = -v2 / norm, dy = v1 / norm;
  double reach = static_cast<double>(xmax - xmin + ymax - ymin) + 4 * m;
  double tx = static_cast<double>(conv.translate.x1), ty = static_cast<double>(conv.translate.x2);
  os << "<line x1=\"" << fmt(X(tx - reach * dx)) << "\" y1=\"" << fmt(Y(ty - reach * dy)) << "\" x2=\""
     << fmt(X(tx + reach * dx)) << "\" y2=\"" << fmt(Y(ty + reach * dy))
     << "\" stroke=\"#4477aa\" stroke-width=\"1\"/>\n";

  for (const auto& [seg, c] : p) {
    Vec2 a = seg.tail(), b = seg.head();
    os << "<line x1=\"" << fmt(X(static_cast<double>(a.x1))) << "\" y1=\"" << fmt(Y(static_cast<double>(a.x2)))
       << "\" x2=\"" << fmt(X(static_cast<double>(b.x1))) << "\" y2=\"" << fmt(Y(static_cast<double>(b.x2))) << "\"";
    if (c > 0)
      os << " stroke=\"black\" stroke-width=\"" << (c > 1 ? 4 : 2) << "\"";
    else
      os << " stroke=\"#cc3311\" stroke-width=\"" << (c < -1 ? 4 : 2) << "\" stroke-dasharray=\"6,4\"";
    os << "/>\n";
  }
  os << "<circle cx=\"" << fmt(X(0)) << "\" cy=\"" << fmt(Y(0)) << "\" r=\"3\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_bars_svg(const std::vector<BarRow>& rows, const std::string& title) {
  double lo = 0, hi = 0;
  bool first = true;
  for (const auto& r : rows)
    for (const auto& b : r.bars) {
      if (first || b.lo < lo) lo = b.lo;
      if (first || b.hi > hi) hi = b.hi;
      first = false;
    }
  // Fractal lengths are of order one, so the hull is stretched to a fixed
  // plot width instead of using the lattice unit.
  const double plot_w = 800, pad = 40, row_h = 32, row_gap = 30, label_px = 14, bar_px = 12;
  const double scale = hi > lo ? plot_w / (hi - lo) : 1.0;
  const double width = plot_w + 2 * pad;
  const double height = static_cast<double>(rows.size()) * (row_h + row_gap) + 2 * pad;
  auto X = [&](double x) { return pad + (x - lo) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  os << "<title>" << escape(title) << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"white\"/>\n";
  // Rows are listed top to bottom; the origin of the line is marked on each.
  for (std::size_t k = 0; k < rows.size(); ++k) {
    double top = pad + static_cast<double>(k) * (row_h + row_gap) + row_gap - 10;
    os << "<text x=\"" << fmt(pad) << "\" y=\"" << fmt(top - 6) << "\" font-size=\"" << fmt(label_px)
       << "\" font-family=\"sans-serif\">" << escape(rows[k].label) << "</text>\n";
    for (const auto& b : rows[k].bars) {
      const char* color = kPalette[static_cast<std::size_t>(b.color) % (sizeof kPalette / sizeof *kPalette)];
      double w = (b.hi - b.lo) * scale;
      os << "<rect x=\"" << fmt(X(b.lo)) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(w) << "\" height=\""
         << fmt(row_h) << "\" fill=\"" << color << "\" fill-opacity=\"0.6\" stroke=\"black\" stroke-width=\"1\"/>\n";
      // Rough glyph width; labels that would spill over a neighbour are dropped.
      if (w >= 0.62 * bar_px * static_cast<double>(b.label.size()) + 4)
        os << "<text x=\"" << fmt(X((b.lo + b.hi) / 2)) << "\" y=\"" << fmt(top + row_h / 2 + bar_px / 3)
           << "\" font-size=\"" << fmt(bar_px) << "\" font-family=\"sans-serif\" text-anchor=\"middle\">"
           << escape(b.label) << "</text>\n";
    }
    if (lo <= 0 && 0 <= hi)
      os << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(top - 4) << "\" x2=\"" << fmt(X(0)) << "\" y2=\""
         << fmt(top + row_h + 4) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rauzy2

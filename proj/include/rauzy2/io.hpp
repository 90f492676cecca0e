#pragma once

#include <string>
#include <vector>

#include "rauzy2/fractal.hpp"
#include "rauzy2/patch.hpp"

namespace rauzy2 {

struct PatchDocument {
  struct Entry {
    std::int64_t x1 = 0, x2 = 0;
    int star = 1;
    std::int64_t coef = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::string case_id;
  long a = 0;
  unsigned n = 0;
  std::vector<Entry> segments;
  friend bool operator==(const PatchDocument&, const PatchDocument&) = default;
};

struct IntervalDocument {
  struct Entry {
    std::string lo, hi;
    std::string symbol;
    std::string error_bound;
    std::string kind;  // "approx" or "exact"
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::string case_id;
  long a = 0;
  unsigned n = 0;
  std::string system;
  std::vector<Entry> intervals;
  friend bool operator==(const IntervalDocument&, const IntervalDocument&) = default;
};

inline constexpr int kDocumentDigits = 32;

PatchDocument make_patch_document(const CaseSpec& spec, unsigned n, const SignedPatch& p);
SignedPatch patch_from_document(const PatchDocument& doc);
std::string emit_json(const PatchDocument& doc);
PatchDocument parse_patch_document(const std::string& text);

IntervalDocument::Entry make_interval_entry(const Interval& iv, const std::string& symbol);
std::string emit_json(const IntervalDocument& doc);
IntervalDocument parse_interval_document(const std::string& text);

struct SvgStyle {
  double unit = 40.0;  // pixels per lattice unit
  double margin = 1.0;  // lattice units around the content
};

// Patch drawing with the contractive line P (+ translate) overlaid.
std::string render_patch_svg(const SignedPatch& p, const EigenData& ed, const SurfaceConvention& conv,
                             const std::string& title, const SvgStyle& style = {});

struct BarRow {
  struct Bar {
    double lo = 0, hi = 0;
    std::string label;
    int color = 0;  // palette index
  };
  std::string label;
  std::vector<Bar> bars;
};

std::string render_bars_svg(const std::vector<BarRow>& rows, const std::string& title);

}  // namespace rauzy2

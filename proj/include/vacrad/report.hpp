#pragma once

#include "vacrad/curves.hpp"
#include "vacrad/rates.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace vacrad {

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

struct CurveDocument {
    CurveSpec spec;
    std::vector<CurvePoint> points;  // rows that carry a y value
    std::vector<double> skipped;     // abscissae flagged resonance_skipped
};

CurveDocument make_document(const CurveSpec& spec, const std::vector<CurvePoint>& curve);

// CSV: a "# key=value; ..." metadata line, the header "x,y,flags", then one
// row per point with a y value.
void write_csv(std::ostream& os, const CurveDocument& doc);
CurveDocument read_csv(std::istream& is);

// JSON: {"meta": {family, x_definition, params..., skipped}, "points": [{x, y, flags}]}.
void write_json(std::ostream& os, const CurveDocument& doc);
CurveDocument read_json(std::istream& is);

// Human-readable component table; absolute rates in 1/s when gamma0_abs > 0.
void write_breakdown(std::ostream& os, const std::string& label, const RateBreakdown& rates, double gamma0_abs = 0.0);

}  // namespace vacrad

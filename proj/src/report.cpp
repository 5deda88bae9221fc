#include "vacrad/report.hpp"

#include "vacrad/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace vacrad {

namespace {

using nlohmann::json;

std::string to_string(EvalPath p) { return p == EvalPath::ClosedForm ? "closed" : "integral"; }
std::string to_string(ParallelFormula f) { return f == ParallelFormula::AsPrinted ? "as_printed" : "corrected"; }

EvalPath eval_path_from(const std::string& s) {
    if (s == "integral") return EvalPath::RegularizedIntegral;
    if (s == "closed") return EvalPath::ClosedForm;
    throw ConfigError(fmt::format("unknown eval_path '{}'", s));
}

ParallelFormula formula_from(const std::string& s) {
    if (s == "corrected") return ParallelFormula::Corrected;
    if (s == "as_printed") return ParallelFormula::AsPrinted;
    throw ConfigError(fmt::format("unknown parallel_formula '{}'", s));
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError(fmt::format("bad number '{}'", s));
    return v;
}

// Ordered metadata shared by both formats; values are strings for CSV.
std::vector<std::pair<std::string, std::string>> meta_fields(const CurveSpec& spec) {
    return {
        {"family", to_string(spec.family)},
        {"x_definition", to_string(spec.axis())},
        {"x_min", format_double(spec.lo)},
        {"x_max", format_double(spec.hi)},
        {"points", std::to_string(spec.points)},
        {"omega_ratio", format_double(spec.params.omega_ratio)},
        {"b_over_d", format_double(spec.params.b_over_d)},
        {"xi", format_double(spec.params.xi)},
        {"v_over_c", format_double(spec.params.beta)},
        {"eval_path", to_string(spec.params.eval_path)},
        {"parallel_formula", to_string(spec.params.parallel_formula)},
    };
}

CurveSpec spec_from_fields(const std::map<std::string, std::string>& f) {
    auto get = [&f](const char* k) {
        const auto it = f.find(k);
        if (it == f.end()) throw ConfigError(fmt::format("curve metadata lacks '{}'", k));
        return it->second;
    };
    CurveSpec spec;
    spec.family = family_from_string(get("family"));
    if (get("x_definition") != to_string(x_definition_for(spec.family)))
        throw ConfigError(fmt::format("x_definition '{}' does not match family {}", get("x_definition"),
                                      to_string(spec.family)));
    spec.x_definition = x_definition_for(spec.family);
    spec.lo = parse_double(get("x_min"));
    spec.hi = parse_double(get("x_max"));
    spec.points = std::stoi(get("points"));
    spec.params.omega_ratio = parse_double(get("omega_ratio"));
    spec.params.b_over_d = parse_double(get("b_over_d"));
    spec.params.xi = parse_double(get("xi"));
    spec.params.beta = parse_double(get("v_over_c"));
    spec.params.eval_path = eval_path_from(get("eval_path"));
    spec.params.parallel_formula = formula_from(get("parallel_formula"));
    return spec;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

CurveDocument make_document(const CurveSpec& spec, const std::vector<CurvePoint>& curve) {
    CurveDocument doc;
    doc.spec = spec;
    for (const CurvePoint& p : curve) {
        if (p.y) doc.points.push_back(p);
        else doc.skipped.push_back(p.x);
    }
    return doc;
}

void write_csv(std::ostream& os, const CurveDocument& doc) {
    os << "# ";
    bool first = true;
    for (const auto& [k, v] : meta_fields(doc.spec)) {
        os << (first ? "" : "; ") << k << '=' << v;
        first = false;
    }
    os << "; skipped=" << doc.skipped.size() << '\n';
    os << "x,y,flags\n";
    for (const CurvePoint& p : doc.points)
        os << format_double(p.x) << ',' << format_double(*p.y) << ',' << flags_to_string(p.flags) << '\n';
}

CurveDocument read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# ", 0) != 0) throw ConfigError("CSV curve lacks its metadata line");
    std::map<std::string, std::string> fields;
    std::istringstream meta(line.substr(2));
    for (std::string item; std::getline(meta, item, ';');) {
        if (!item.empty() && item.front() == ' ') item.erase(0, 1);
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError(fmt::format("bad CSV metadata item '{}'", item));
        fields[item.substr(0, eq)] = item.substr(eq + 1);
    }
    CurveDocument doc;
    doc.spec = spec_from_fields(fields);
    if (!std::getline(is, line) || line != "x,y,flags") throw ConfigError("CSV curve lacks the x,y,flags header");
    int row = 2;
    while (std::getline(is, line)) {
        ++row;
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ConfigError(fmt::format("CSV row {}: expected three columns", row));
        CurvePoint p;
        p.x = parse_double(line.substr(0, c1));
        p.y = parse_double(line.substr(c1 + 1, c2 - c1 - 1));
        p.flags = flags_from_string(line.substr(c2 + 1));
        doc.points.push_back(p);
    }
    return doc;
}

void write_json(std::ostream& os, const CurveDocument& doc) {
    const CurveSpec& s = doc.spec;
    json meta = {
        {"family", to_string(s.family)},
        {"x_definition", to_string(s.axis())},
        {"x_min", s.lo},
        {"x_max", s.hi},
        {"points", s.points},
        {"omega_ratio", s.params.omega_ratio},
        {"b_over_d", s.params.b_over_d},
        {"xi", s.params.xi},
        {"v_over_c", s.params.beta},
        {"eval_path", to_string(s.params.eval_path)},
        {"parallel_formula", to_string(s.params.parallel_formula)},
        {"skipped", doc.skipped},
    };
    json pts = json::array();
    for (const CurvePoint& p : doc.points) pts.push_back({{"x", p.x}, {"y", *p.y}, {"flags", flags_to_string(p.flags)}});
    os << json{{"meta", meta}, {"points", pts}}.dump(1) << '\n';
}

CurveDocument read_json(std::istream& is) {
    json j;
    try {
        j = json::parse(is);
    } catch (const json::exception& e) {
        throw ConfigError(fmt::format("invalid curve JSON: {}", e.what()));
    }
    CurveDocument doc;
    try {
        const json& m = j.at("meta");
        std::map<std::string, std::string> fields;
        for (const auto& [k, v] : meta_fields(CurveSpec{})) {
            const json& e = m.at(k);
            fields[k] = e.is_string() ? e.get<std::string>()
                        : e.is_number_integer() ? std::to_string(e.get<long long>())
                                                : format_double(e.get<double>());
        }
        doc.spec = spec_from_fields(fields);
        doc.skipped = m.at("skipped").get<std::vector<double>>();
        for (const json& p : j.at("points")) {
            CurvePoint cp;
            cp.x = p.at("x").get<double>();
            cp.y = p.at("y").get<double>();
            cp.flags = flags_from_string(p.at("flags").get<std::string>());
            doc.points.push_back(cp);
        }
    } catch (const json::exception& e) {
        throw ConfigError(fmt::format("malformed curve JSON: {}", e.what()));
    }
    return doc;
}

void write_breakdown(std::ostream& os, const std::string& label, const RateBreakdown& r, double gamma0_abs) {
    os << label << " (rates in units of Gamma_0";
    os << (r.series_path_used ? ", series path)\n" : ")\n");
    auto row = [&os, gamma0_abs](const char* name, double v) {
        os << fmt::format("  {:<28} {:>24}", name, format_double(v));
        if (gamma0_abs > 0) os << fmt::format("  {:>24} 1/s", format_double(v * gamma0_abs));
        os << '\n';
    };
    row("Gamma_EB", r.eb);
    row("Gamma_EE", r.ee);
    row("Gamma_BB", r.bb);
    row("Gamma_total", r.total);
    row("Gamma_1", r.gamma1);
    os << fmt::format("  {:<28} {:>24}\n", "Gamma_total / Gamma_1", format_double(r.ratio_total_over_gamma1));
}

}  // namespace vacrad

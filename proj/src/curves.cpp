#include "vacrad/curves.hpp"

#include "vacrad/errors.hpp"
#include "vacrad/halfspace.hpp"

#include <fmt/format.h>

#include <cmath>
#include <exception>

namespace vacrad {

XDefinition x_definition_for(Family f) {
    switch (f) {
    case Family::HalfspaceRatio: return XDefinition::TwoOmegaCmBOverC;
    case Family::CavityRatio: return XDefinition::OmegaCmDOverC;
    case Family::DecayPerp:
    case Family::DecayPar: return XDefinition::TwoK0B;
    }
    return XDefinition::TwoK0B;
}

std::string to_string(Family f) {
    switch (f) {
    case Family::HalfspaceRatio: return "halfspace_ratio";
    case Family::CavityRatio: return "cavity_ratio";
    case Family::DecayPerp: return "decay_perp";
    case Family::DecayPar: return "decay_par";
    }
    return "";
}

Family family_from_string(const std::string& s) {
    for (Family f : {Family::HalfspaceRatio, Family::CavityRatio, Family::DecayPerp, Family::DecayPar})
        if (to_string(f) == s) return f;
    throw ConfigError(fmt::format("unknown curve family '{}'", s));
}

std::string to_string(XDefinition x) {
    switch (x) {
    case XDefinition::TwoOmegaCmBOverC: return "x = 2*omega_cm*b/c";
    case XDefinition::OmegaCmDOverC: return "x = omega_cm*d/c";
    case XDefinition::TwoK0B: return "x = 2*k0*b";
    }
    return "";
}

std::string flags_to_string(unsigned flags) {
    std::string out;
    if (flags & kResonanceSkipped) out += "resonance_skipped";
    if (flags & kSeriesPathUsed) out += out.empty() ? "series_path_used" : "|series_path_used";
    return out;
}

unsigned flags_from_string(const std::string& s) {
    unsigned f = kNoFlags;
    if (s.find("resonance_skipped") != std::string::npos) f |= kResonanceSkipped;
    if (s.find("series_path_used") != std::string::npos) f |= kSeriesPathUsed;
    return f;
}

void CurveSpec::validate() const {
    if (!(lo < hi)) throw ConfigError(fmt::format("curve range [{}, {}] is empty", lo, hi));
    if (points < 2) throw ConfigError(fmt::format("curve needs at least 2 points (got {})", points));
    if (x_definition && *x_definition != x_definition_for(family))
        throw ConfigError(fmt::format("x definition '{}' does not match family {}", to_string(*x_definition),
                                      to_string(family)));
    switch (family) {
    case Family::HalfspaceRatio:
    case Family::CavityRatio:
        if (!(params.omega_ratio >= 1.0))
            throw ConfigError(fmt::format("omega_ratio must be >= 1 (got {})", params.omega_ratio));
        if (!(lo >= 0.0)) throw ConfigError("scaled distance must be >= 0");
        if (family == Family::CavityRatio && !(params.b_over_d > 0.0 && params.b_over_d < 1.0))
            throw ConfigError(fmt::format("b_over_d must lie in (0, 1) (got {})", params.b_over_d));
        break;
    case Family::DecayPerp:
    case Family::DecayPar:
        if (!(params.xi > 1.0)) throw ConfigError(fmt::format("xi must be > 1 (got {})", params.xi));
        if (!(lo > 0.0)) throw ConfigError("decay curves need x > 0");
        break;
    }
    if (!(params.beta >= 0.0 && params.beta < 0.1))
        throw ConfigError(fmt::format("v_max/c must lie in [0, 0.1) (got {})", params.beta));
}

std::vector<double> CurveSpec::abscissae() const {
    std::vector<double> xs(points);
    for (int i = 0; i < points; ++i) xs[i] = lo + (hi - lo) * i / (points - 1);
    xs.back() = hi;
    return xs;
}

double phase_variable(const CurveSpec& spec, double x) {
    switch (spec.family) {
    case Family::HalfspaceRatio:
    case Family::CavityRatio: return x * (1.0 - 1.0 / spec.params.omega_ratio);
    case Family::DecayPerp:
    case Family::DecayPar: return x;
    }
    return x;
}

CurvePoint evaluate_point(const CurveSpec& spec, double x) {
    CurvePoint pt;
    pt.x = x;
    const CurveParams& p = spec.params;
    switch (spec.family) {
    case Family::HalfspaceRatio: {
        const double bq0 = 0.5 * phase_variable(spec, x);
        const RateBreakdown r = halfspace_components(HalfspacePoint{p.omega_ratio, p.beta, bq0});
        pt.y = r.ratio_total_over_gamma1;
        if (r.series_path_used) pt.flags |= kSeriesPathUsed;
        break;
    }
    case Family::CavityRatio: {
        const CavityPoint cp{p.omega_ratio, p.beta, phase_variable(spec, x), p.b_over_d};
        try {
            pt.y = cavity_total_ratio(cp, p.eval_path);
        } catch (const ResonanceError&) {
            pt.flags |= kResonanceSkipped;
        }
        break;
    }
    case Family::DecayPerp:
    case Family::DecayPar: {
        const DecayPoint dp{p.xi, x, p.beta};
        pt.y = spec.family == Family::DecayPerp ? decay_perp_ratio(dp) : decay_par_ratio(dp, p.parallel_formula);
        if (x <= kStaticSeriesThreshold || (p.beta > 0 && x < kMotionSeriesThreshold)) pt.flags |= kSeriesPathUsed;
        break;
    }
    }
    return pt;
}

std::vector<CurvePoint> sweep(const CurveSpec& spec) {
    spec.validate();
    const std::vector<double> xs = spec.abscissae();
    std::vector<CurvePoint> out(xs.size());
    std::exception_ptr failure;
    const int n = static_cast<int>(xs.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            out[i] = evaluate_point(spec, xs[i]);
        } catch (...) {
#pragma omp critical(vacrad_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<CurvePoint> sweep_serial(const CurveSpec& spec) {
    spec.validate();
    std::vector<CurvePoint> out;
    for (double x : spec.abscissae()) out.push_back(evaluate_point(spec, x));
    return out;
}

std::vector<Extremum> find_extrema(std::span<const CurvePoint> curve) {
    std::vector<double> xs, ys;
    for (const CurvePoint& p : curve)
        if (p.y) {
            xs.push_back(p.x);
            ys.push_back(*p.y);
        }
    if (xs.size() < 3) throw DomainError(fmt::format("extrema search needs at least 3 valued points (got {})", xs.size()));

    std::vector<Extremum> out;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const bool is_max = ys[i] > ys[i - 1] && ys[i] >= ys[i + 1];
        const bool is_min = ys[i] < ys[i - 1] && ys[i] <= ys[i + 1];
        if (!is_max && !is_min) continue;
        Extremum e{xs[i], ys[i], is_max ? ExtremumKind::Maximum : ExtremumKind::Minimum};
        // Parabola y = y1 + p t + q t^2 in t = x - x1.
        const double h0 = xs[i - 1] - xs[i], h2 = xs[i + 1] - xs[i];
        const double s0 = (ys[i - 1] - ys[i]) / h0, s2 = (ys[i + 1] - ys[i]) / h2;
        const double q = (s0 - s2) / (h0 - h2);
        const double p = s0 - q * h0;
        if (q != 0.0) {
            const double t = -p / (2.0 * q);
            if (t >= h0 && t <= h2) {
                e.x = xs[i] + t;
                e.y = ys[i] - p * p / (4.0 * q);
            }
        }
        out.push_back(e);
    }
    return out;
}

double analytic_asymptote(const CurveSpec& spec) {
    switch (spec.family) {
    case Family::HalfspaceRatio:
    case Family::CavityRatio: return 1.0;
    case Family::DecayPerp: return decay_perp_asymptote({spec.params.xi, 1.0, spec.params.beta});
    case Family::DecayPar: return decay_par_asymptote({spec.params.xi, 1.0, spec.params.beta});
    }
    return 1.0;
}

double estimate_asymptote(std::span<const CurvePoint> curve, double fraction) {
    std::vector<double> ys;
    for (const CurvePoint& p : curve)
        if (p.y) ys.push_back(*p.y);
    if (ys.empty()) throw DomainError("asymptote estimate needs valued points");
    const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(fraction * ys.size()));
    double sum = 0.0;
    for (std::size_t i = ys.size() - n; i < ys.size(); ++i) sum += ys[i];
    return sum / n;
}

}  // namespace vacrad

#pragma once

namespace vacrad {

struct RateBreakdown {
    double eb = 0.0;
    double ee = 0.0;
    double bb = 0.0;
    double total = 0.0;
    double gamma0 = 0.0;
    double gamma1 = 0.0;
    double ratio_total_over_gamma1 = 0.0;
    bool series_path_used = false;

    // Multiplies every rate by gamma0_abs; ratios are unchanged.
    RateBreakdown scaled(double gamma0_abs) const {
        RateBreakdown out = *this;
        out.eb *= gamma0_abs;
        out.ee *= gamma0_abs;
        out.bb *= gamma0_abs;
        out.total = out.eb + out.ee + out.bb;
        out.gamma0 *= gamma0_abs;
        out.gamma1 *= gamma0_abs;
        return out;
    }
};

}  // namespace vacrad

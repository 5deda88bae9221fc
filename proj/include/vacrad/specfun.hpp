#pragma once

#include <complex>

namespace vacrad {

using cplx = std::complex<double>;

// z = exp(i theta) with theta reduced to [0, 2 pi).
class UnitCirclePoint {
public:
    explicit UnitCirclePoint(double theta);

    double theta() const { return theta_; }
    cplx z() const;
    // True when z = 1, the branch point of Li_s and of the s = 1 Lerch series.
    bool on_branch_point() const { return theta_ == 0.0; }

private:
    double theta_;
};

// Principal-branch dilogarithm Li_2(z), valid on the whole complex plane.
cplx dilog(cplx z);

// Lerch transcendent Phi(z, s, a) = sum_{n>=0} z^n / (n + a)^s for |z| <= 1,
// integer s in [1, 5] and real a that is not a non-positive integer.
cplx lerch_phi(cplx z, int s, double a);
cplx lerch_phi(const UnitCirclePoint& z, int s, double a);

// 2F1(1, beta; 1 + beta; z) = beta * Phi(z, 1, beta).
cplx hyp2f1_reduced(double beta, cplx z);
cplx hyp2f1_reduced(double beta, const UnitCirclePoint& z);

// Principal Arg(1 - exp(-i theta)) = (pi - theta)/2 for theta in (0, 2 pi).
double arg_one_minus_exp(double theta);

}  // namespace vacrad

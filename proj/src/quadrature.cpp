#include "hyplab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace hyplab {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kXgk[8] = {
    0.99145537112081263920685469752632852,
    0.94910791234275852452618968404785126,
    0.86486442335976907278971278864092620,
    0.74153118559939443986386477328078840,
    0.58608723546769113029414483825872959,
    0.40584515137739716690660641207696146,
    0.20778495500789846760068940377324491,
    0.0};

constexpr double kWgk[8] = {
    0.02293532201052922496373200805896959,
    0.06309209262997855329070066318920429,
    0.10479001032225018383987632254151801,
    0.14065325971552591874518959051023792,
    0.16900472663926790282658342659855028,
    0.19035057806478540991325640242101368,
    0.20443294007529889241416199923464908,
    0.20948214108472782801299917489171426};

constexpr double kWg[4] = {
    0.12948496616886969327061143267908202,
    0.27970539148927666790146777142377958,
    0.38183005050511894495036977548897513,
    0.41795918367346938775510204081632653};

struct Estimate {
    double integral;
    double error;
};

Estimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (f1 + f2);
    }
    return {resk * h, std::abs(resk - resg) * std::abs(h)};
}

double refine(const std::function<double(double)>& f, double a, double b,
              const Estimate& est, double tol, int depth) {
    if (est.error <= tol || depth >= 48 || !(b - a > 0.0)) return est.integral;
    const double m = 0.5 * (a + b);
    const Estimate left = gk15(f, a, m);
    const Estimate right = gk15(f, m, b);
    return refine(f, a, m, left, 0.5 * tol, depth + 1) +
           refine(f, m, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_floor) {
    if (a == b) return 0.0;
    const Estimate whole = gk15(f, a, b);
    const double tol = std::max(rel_tol * std::abs(whole.integral), abs_floor);
    return refine(f, a, b, whole, tol, 0);
}

}  // namespace hyplab

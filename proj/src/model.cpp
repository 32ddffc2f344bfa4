#include "hyplab/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyplab/quadrature.hpp"

namespace hyplab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_interior(ModelDomain domain, Complex z, const char* who) {
    if (domain == ModelDomain::Disc) {
        if (!(1.0 - std::abs(z) > kBoundaryTol))
            throw RangeViolation(std::string(who) + ": point not interior to the disc");
    } else {
        if (!(z.real() > kBoundaryTol))
            throw RangeViolation(std::string(who) + ": point not interior to the half-plane");
    }
}

// Inverse Gudermannian; arc length along a half-plane geodesic circle is
// half of this in the polar angle about the circle center.
double lam(double phi) { return std::asinh(std::tan(phi)); }
double lam_inv(double s) { return std::atan(std::sinh(s)); }

}  // namespace

SampledCurve SampledCurve::from_samples(std::vector<double> params, std::vector<Complex> points) {
    if (params.size() != points.size())
        throw RangeViolation("SampledCurve: params and points must have equal length");
    if (params.size() < 2) throw RangeViolation("SampledCurve: need at least 2 samples");
    for (std::size_t i = 1; i < params.size(); ++i) {
        if (!(params[i] > params[i - 1]))
            throw RangeViolation("SampledCurve: params must be strictly increasing");
        if (points[i] == points[i - 1])
            throw RangeViolation("SampledCurve: consecutive points must be distinct");
    }
    SampledCurve c;
    c.params = std::move(params);
    c.points = std::move(points);
    return c;
}

SampledCurve SampledCurve::from_evaluator(std::function<Complex(double)> position,
                                          std::function<Complex(double)> velocity, double a,
                                          double b, int samples) {
    if (!(b > a)) throw RangeViolation("SampledCurve: empty parameter interval");
    if (samples < 2) throw RangeViolation("SampledCurve: need at least 2 samples");
    std::vector<double> params(samples);
    std::vector<Complex> points(samples);
    for (int i = 0; i < samples; ++i) {
        params[i] = a + (b - a) * (static_cast<double>(i) / (samples - 1));
        points[i] = position(params[i]);
    }
    SampledCurve c = from_samples(std::move(params), std::move(points));
    c.position = std::move(position);
    c.velocity = std::move(velocity);
    return c;
}

std::size_t SampledCurve::segment_of(double t) const {
    if (t < params.front() || t > params.back())
        throw RangeViolation("SampledCurve: parameter outside the sampled range");
    auto it = std::upper_bound(params.begin(), params.end(), t);
    std::size_t i = static_cast<std::size_t>(it - params.begin());
    if (i == 0) return 0;
    if (i >= params.size()) return params.size() - 2;
    return i - 1;
}

Complex SampledCurve::at(double t) const {
    if (position) return position(t);
    const std::size_t i = segment_of(t);
    const double u = (t - params[i]) / (params[i + 1] - params[i]);
    return points[i] + u * (points[i + 1] - points[i]);
}

Complex SampledCurve::velocity_at(double t) const {
    if (velocity) return velocity(t);
    const std::size_t i = segment_of(t);
    return (points[i + 1] - points[i]) / (params[i + 1] - params[i]);
}

// k(z, w) = atanh |(z-w)/(z+conj w)| rearranged as
// log((|z+conj w| + |z-w|) / (2 sqrt(Re z Re w))), which avoids the 1-rho
// cancellation for far-apart points and is exactly symmetric.
double dist_halfplane_raw(Complex z, Complex w) {
    const double rz = z.real(), rw = w.real();
    if (!(rz > 0.0) || !(rw > 0.0)) return kInf;
    const double a = std::abs(z + std::conj(w));
    const double b = std::abs(z - w);
    if (!std::isfinite(a) || !std::isfinite(b)) return kInf;
    if (b == 0.0) return 0.0;
    return std::log((a + b) / (2.0 * std::sqrt(rz * rw)));
}

// Same rearrangement for atanh |(z-w)/(1-conj(z)w)| using
// |1-conj(z)w|^2 - |z-w|^2 = (1-|z|^2)(1-|w|^2).
double dist_disc_raw(Complex z, Complex w) {
    const double mz = one_minus_sq_abs(z);
    const double mw = one_minus_sq_abs(w);
    if (!(mz > 0.0) || !(mw > 0.0)) return kInf;
    const double a = std::abs(1.0 - std::conj(z) * w);
    const double b = std::abs(z - w);
    if (b == 0.0) return 0.0;
    return std::log((a + b) / std::sqrt(mz * mw));
}

double dist_halfplane(HalfPlanePoint z, HalfPlanePoint w) {
    return dist_halfplane_raw(z.value(), w.value());
}

double dist_disc(DiscPoint z, DiscPoint w) { return dist_disc_raw(z.value(), w.value()); }

double hyperbolic_density(ModelDomain domain, Complex z) {
    require_interior(domain, z, "hyperbolic_density");
    if (domain == ModelDomain::Disc) return 1.0 / one_minus_sq_abs(z);
    return 1.0 / (2.0 * z.real());
}

double curve_length_between(const SampledCurve& curve, ModelDomain domain, double s, double t) {
    if (!(s <= t)) throw RangeViolation("curve_length: need s <= t");
    if (s < curve.params.front() || t > curve.params.back())
        throw RangeViolation("curve_length: interval outside the sampled range");
    for (const Complex& p : curve.points) require_interior(domain, p, "curve_length");
    if (s == t) return 0.0;

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < curve.params.size(); ++i) {
        const double a = std::max(s, curve.params[i]);
        const double b = std::min(t, curve.params[i + 1]);
        if (!(b > a)) continue;
        Complex p0 = curve.points[i];
        Complex slope = (curve.points[i + 1] - curve.points[i]) /
                        (curve.params[i + 1] - curve.params[i]);
        const double pa = curve.params[i];
        auto integrand = [&](double u) {
            Complex pos = curve.position ? curve.position(u) : p0 + (u - pa) * slope;
            Complex vel = curve.velocity ? curve.velocity(u) : slope;
            require_interior(domain, pos, "curve_length");
            return hyperbolic_density(domain, pos) * std::abs(vel);
        };
        total += integrate_adaptive(integrand, a, b, 1e-10);
    }
    return total;
}

double curve_length(const SampledCurve& curve, ModelDomain domain) {
    return curve_length_between(curve, domain, curve.params.front(), curve.params.back());
}

namespace {

// Unit-speed disc geodesic through z, w: transport z to the origin with a
// Mobius map, run along the radius, transport back.
SampledCurve disc_geodesic(Complex z, Complex w, int samples) {
    const Complex wp = (w - z) / (1.0 - std::conj(z) * w);
    const double d = std::atanh(std::abs(wp));
    const Complex dir = wp / std::abs(wp);
    const Complex zc = std::conj(z);
    const double zsq = one_minus_sq_abs(z);
    auto pos = [=](double t) {
        const Complex u = std::tanh(t) * dir;
        return (u + z) / (1.0 + zc * u);
    };
    auto vel = [=](double t) {
        const double th = std::tanh(t);
        const Complex u = th * dir;
        const Complex den = 1.0 + zc * u;
        return zsq / (den * den) * dir * (1.0 - th * th);
    };
    return SampledCurve::from_evaluator(pos, vel, 0.0, d, samples);
}

// Unit-speed half-plane geodesic.  Horizontal rays when Im z = Im w, else the
// circle centered on the imaginary axis through both points.
SampledCurve halfplane_geodesic(Complex z, Complex w, int samples) {
    const double scale = std::abs(z) + std::abs(w);
    if (std::abs(z.imag() - w.imag()) <= 1e-15 * scale) {
        const double x0 = z.real(), x1 = w.real();
        const double h = z.imag();
        const double d = 0.5 * std::abs(std::log(x1 / x0));
        const double sgn = (x1 > x0) ? 1.0 : -1.0;
        auto pos = [=](double t) { return Complex(x0 * std::exp(2.0 * sgn * t), h); };
        auto vel = [=](double t) {
            return Complex(2.0 * sgn * x0 * std::exp(2.0 * sgn * t), 0.0);
        };
        return SampledCurve::from_evaluator(pos, vel, 0.0, d, samples);
    }
    const double c0 = (std::norm(z) - std::norm(w)) / (2.0 * (z.imag() - w.imag()));
    const Complex center(0.0, c0);
    const double r = std::abs(z - center);
    const double phi_z = std::atan2(z.imag() - c0, z.real());
    const double phi_w = std::atan2(w.imag() - c0, w.real());
    const double sz = lam(phi_z), sw = lam(phi_w);
    const double d = 0.5 * std::abs(sw - sz);
    const double sgn = (sw > sz) ? 1.0 : -1.0;
    auto pos = [=](double t) {
        const double phi = lam_inv(sz + 2.0 * sgn * t);
        return center + r * Complex(std::cos(phi), std::sin(phi));
    };
    auto vel = [=](double t) {
        const double phi = lam_inv(sz + 2.0 * sgn * t);
        return Complex(0.0, 1.0) * (r * Complex(std::cos(phi), std::sin(phi))) *
               (2.0 * sgn * std::cos(phi));
    };
    return SampledCurve::from_evaluator(pos, vel, 0.0, d, samples);
}

}  // namespace

SampledCurve geodesic_model(ModelDomain domain, Complex z, Complex w, int samples) {
    require_interior(domain, z, "geodesic_model");
    require_interior(domain, w, "geodesic_model");
    if (z == w) throw RangeViolation("geodesic_model: endpoints must differ");
    if (domain == ModelDomain::Disc) return disc_geodesic(z, w, samples);
    return halfplane_geodesic(z, w, samples);
}

double orthogonality_angle(BoundaryPoint sigma, DiscPoint z) {
    const Complex u = 1.0 - std::conj(sigma.value()) * z.value();
    if (u == 0.0) throw RangeViolation("orthogonality_angle: z coincides with sigma");
    return std::arg(u);
}

bool horodisc_contains(const HorocycleDisc& h, DiscPoint z) {
    const Complex d = h.center.value() - z.value();
    return std::norm(d) < h.radius * one_minus_sq_abs(z.value());
}

bool sector_contains(double beta, Complex z) {
    if (!(beta > 0.0 && beta < kPi)) throw RangeViolation("sector_contains: beta in (0, pi)");
    if (z == 0.0) return false;
    return std::abs(std::arg(z)) < beta;
}

}  // namespace hyplab

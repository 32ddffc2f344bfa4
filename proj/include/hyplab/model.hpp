#pragma once

#include <functional>
#include <vector>

#include "hyplab/core.hpp"

namespace hyplab {

// The two model domains with closed-form hyperbolic geometry: the unit disc
// and the right half-plane.  Densities are 1/(1-|z|^2) and 1/(2 Re z); this
// is the normalization with k(1, x) = (1/2) log x on the half-plane.
enum class ModelDomain { Disc, HalfPlane };

class DiscPoint {
public:
    explicit DiscPoint(Complex v) : v_(v) {
        if (!(1.0 - std::abs(v) > kBoundaryTol))
            throw RangeViolation("DiscPoint: |z| must stay below 1 by more than 1e-12");
    }
    Complex value() const { return v_; }

private:
    Complex v_;
};

class HalfPlanePoint {
public:
    explicit HalfPlanePoint(Complex v) : v_(v) {
        if (!(v.real() > kBoundaryTol))
            throw RangeViolation("HalfPlanePoint: Re z must exceed 1e-12");
    }
    Complex value() const { return v_; }

private:
    Complex v_;
};

class BoundaryPoint {
public:
    explicit BoundaryPoint(Complex v) : v_(v) {
        if (!(std::abs(std::abs(v) - 1.0) <= kBoundaryTol))
            throw RangeViolation("BoundaryPoint: | |z| - 1 | must be <= 1e-12");
    }
    Complex value() const { return v_; }

private:
    Complex v_;
};

struct HorocycleDisc {
    HorocycleDisc(BoundaryPoint center, double radius) : center(center), radius(radius) {
        if (!(radius > 0.0)) throw RangeViolation("HorocycleDisc: radius must be positive");
    }
    BoundaryPoint center;
    double radius;
};

// A piecewise-C^1 curve given by strictly increasing parameter samples.  When
// the analytic position/velocity evaluators are present, lengths integrate
// the true curve; otherwise samples are joined by straight segments, which
// stays an upper-consistent approximation for dense samplings.
struct SampledCurve {
    std::vector<double> params;
    std::vector<Complex> points;
    std::function<Complex(double)> position;  // optional
    std::function<Complex(double)> velocity;  // required iff position present

    static SampledCurve from_samples(std::vector<double> params, std::vector<Complex> points);
    static SampledCurve from_evaluator(std::function<Complex(double)> position,
                                       std::function<Complex(double)> velocity, double a,
                                       double b, int samples);

    std::size_t size() const { return params.size(); }
    bool analytic() const { return static_cast<bool>(position); }

    Complex at(double t) const;           // analytic value or segment interpolation
    Complex velocity_at(double t) const;  // analytic derivative or segment slope

private:
    std::size_t segment_of(double t) const;
};

// Closed forms.  The _raw kernels skip the interior guards (and return +inf
// when a disc argument reaches the boundary); the checked entry points
// enforce the 1e-12 rejection band.
double dist_halfplane_raw(Complex z, Complex w);
double dist_disc_raw(Complex z, Complex w);

double dist_halfplane(HalfPlanePoint z, HalfPlanePoint w);
double dist_disc(DiscPoint z, DiscPoint w);

double hyperbolic_density(ModelDomain domain, Complex z);

double curve_length(const SampledCurve& curve, ModelDomain domain);
double curve_length_between(const SampledCurve& curve, ModelDomain domain, double s, double t);

SampledCurve geodesic_model(ModelDomain domain, Complex z, Complex w, int samples = 129);

// arg(1 - conj(sigma) z), the deviation from a radial approach to sigma.
double orthogonality_angle(BoundaryPoint sigma, DiscPoint z);

// |sigma - z|^2 < R (1 - |z|^2)
bool horodisc_contains(const HorocycleDisc& h, DiscPoint z);

// z != 0 and |arg z| < beta, beta in (0, pi)
bool sector_contains(double beta, Complex z);

}  // namespace hyplab

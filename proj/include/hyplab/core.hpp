#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyplab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Points closer than this to a domain boundary are rejected, not clamped:
// every hyperbolic quantity blows up there and clamping would hide it.
inline constexpr double kBoundaryTol = 1e-12;

// Errors carry a machine-readable code that the CLI maps to an exit status.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class RangeViolation : public Error {
public:
    explicit RangeViolation(const std::string& w) : Error("RANGE_VIOLATION", w) {}
};

class UnsupportedPair : public Error {
public:
    explicit UnsupportedPair(const std::string& w) : Error("UNSUPPORTED_PAIR", w) {}
};

class ScenarioInvalid : public Error {
public:
    explicit ScenarioInvalid(const std::string& w) : Error("SCENARIO_INVALID", w) {}
};

class RayDivergence : public Error {
public:
    RayDivergence(const std::string& w, double bracket_lo, double bracket_hi)
        : Error("RAY_DIVERGENCE", w), bracket_lo(bracket_lo), bracket_hi(bracket_hi) {}
    double bracket_lo;
    double bracket_hi;
};

class EstimationFailure : public Error {
public:
    explicit EstimationFailure(const std::string& w) : Error("ESTIMATION_FAILURE", w) {}
};

class ModelInconsistency : public Error {
public:
    explicit ModelInconsistency(const std::string& w) : Error("MODEL_INCONSISTENCY", w) {}
};

class ParseFailure : public Error {
public:
    ParseFailure(const std::string& w, int line, int column)
        : Error("PARSE_ERROR", w + " (line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

class GridTooLarge : public Error {
public:
    explicit GridTooLarge(const std::string& w) : Error("GRID_TOO_LARGE", w) {}
};

class PropertyFailure : public Error {
public:
    explicit PropertyFailure(const std::string& w) : Error("PROPERTY_FAILURE", w) {}
};

// Deterministic uniform source (splitmix64). std::uniform_real_distribution is
// implementation-defined, which would break byte-identical reruns, so the
// mapping from raw bits to doubles is done by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        for (int i = 0; i < 4; ++i) next();
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double log_uniform(double a, double b) {
        return std::exp(uniform(std::log(a), std::log(b)));
    }

private:
    std::uint64_t state_;
};

// 1 - |z|^2 without the catastrophic cancellation of 1 - norm(z) near the
// unit circle; the larger component goes through the fused multiply-add.
inline double one_minus_sq_abs(Complex z) {
    const double re = z.real(), im = z.imag();
    if (std::abs(re) >= std::abs(im))
        return std::fma(-re, re, 1.0) - im * im;
    return std::fma(-im, im, 1.0) - re * re;
}

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hyplab

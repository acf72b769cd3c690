#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "sympfib/extension.hpp"

namespace sympfib {

// Exact rationals; volume results never pass through floating point.
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& s);  // "p/q" or "p"
std::string format_rational(const Rational& r);

// Exact Bernoulli number B_m for even m >= 2 (Akiyama-Tanigawa scheme).
Rational bernoulli(int m);

// zeta(1 - 2k) = -B_{2k} / (2k), exact.
Rational zeta_neg(int k);

// Harder's formula: chi(Sp(2n,Z)) = prod_{k=1}^{n} zeta(1 - 2k).
Rational euler_char_sp(int n);

struct VolumeResult {
    Rational volume;        // absolute value, per the positivity convention
    Rational signed_value;  // fiber_covolume * base_euler before the convention
    bool sign_convention_applied;
};

// vol = |fiber_covolume * base_euler|. A descriptor arising from PSp must
// have fiber covolume 1 (the center image is normalized to length 1).
VolumeResult seifert_volume(const SeifertDescriptor& d);

// Axis-aligned box in the n = 2 chart coordinates plus a fiber interval.
struct ProductBox {
    Eigen::VectorXd lo, hi;       // n(n+1) chart coordinates
    double fiber_lo, fiber_hi;
};

ProductBox default_box_n2();

struct MeasureCheckResult {
    double residual;        // relative mismatch of the two measure estimates
    double measure_e;       // Monte-Carlo estimate of lambda(E) / Lebesgue(E)
    double measure_preimage;
    std::uint64_t samples;
};

// Monte-Carlo comparison of lambda(E) and lambda(h^{-1}(E)) for the product
// measure lambda = invariant_density x Lebesgue-on-fiber, where h is the
// action of (lift(M), r). The preimage side is evaluated by substitution,
// with the base Jacobian of h^{-1} taken by central finite differences.
MeasureCheckResult product_measure_check(int n, const RealMatrix& M, double r,
                                         const ProductBox& box, std::uint64_t samples,
                                         std::uint64_t seed);

}  // namespace sympfib

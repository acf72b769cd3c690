#include "sympfib/volume.hpp"

#include <cmath>
#include <vector>

namespace sympfib {

Rational parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        using boost::multiprecision::cpp_int;
        if (slash == std::string::npos) return Rational(cpp_int(s));
        const cpp_int num(s.substr(0, slash));
        const cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::runtime_error("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw InvariantViolation("parse_rational: expected \"p/q\" or \"p\", got \"" + s + "\"");
    }
}

std::string format_rational(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Rational bernoulli(int m) {
    if (m < 2 || m % 2 != 0)
        throw InvariantViolation("bernoulli: m must be even and >= 2");
    // Akiyama-Tanigawa transform of 1/(j+1).
    std::vector<Rational> a(m + 1);
    for (int j = 0; j <= m; ++j) a[j] = Rational(1, j + 1);
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j <= m - i; ++j) a[j] = Rational(j + 1) * (a[j] - a[j + 1]);
    return a[0];
}

Rational zeta_neg(int k) {
    if (k < 1) throw InvariantViolation("zeta_neg: k must be >= 1");
    return -bernoulli(2 * k) / Rational(2 * k);
}

Rational euler_char_sp(int n) {
    if (n < 1) throw InvariantViolation("euler_char_sp: n must be >= 1");
    Rational chi = 1;
    for (int k = 1; k <= n; ++k) chi *= zeta_neg(k);
    return chi;
}

VolumeResult seifert_volume(const SeifertDescriptor& d) {
    const Rational covolume = parse_rational(d.fiber_covolume);
    const Rational chi = parse_rational(d.base_euler);
    if (covolume <= 0)
        throw InvariantViolation("seifert_volume: fiber covolume must be positive");
    if (d.arises_from_psp && covolume != 1)
        throw InvariantViolation(
            "seifert_volume: a subgroup arising from PSp has fiber covolume 1");
    const Rational signed_value = covolume * chi;
    return VolumeResult{abs(signed_value), signed_value, true};
}

ProductBox default_box_n2() {
    ProductBox box;
    box.lo.resize(6);
    box.hi.resize(6);
    box.lo << -0.3, -0.3, -0.3, 0.8, -0.15, 0.8;
    box.hi << 0.3, 0.3, 0.3, 1.2, 0.15, 1.2;
    box.fiber_lo = 0.0;
    box.fiber_hi = 1.0;
    return box;
}

namespace {

// Fixed-size n = 2 chart map, hot path of the Monte-Carlo check.
struct FastMobius2 {
    Eigen::Matrix2cd A, B, C, D;

    explicit FastMobius2(const RealMatrix& M) {
        const Blocks b = blocks(M);
        A = b.A.cast<Complex>();
        B = b.B.cast<Complex>();
        C = b.C.cast<Complex>();
        D = b.D.cast<Complex>();
    }

    using Coords = Eigen::Matrix<double, 6, 1>;

    static Eigen::Matrix2cd to_matrix(const Coords& c) {
        Eigen::Matrix2cd Z;
        Z(0, 0) = Complex(c(0), c(3));
        Z(0, 1) = Z(1, 0) = Complex(c(1), c(4));
        Z(1, 1) = Complex(c(2), c(5));
        return Z;
    }

    Coords apply(const Coords& c) const {
        const Eigen::Matrix2cd Z = to_matrix(c);
        const Eigen::Matrix2cd W = (A * Z + B) * (C * Z + D).inverse();
        Coords out;
        out << W(0, 0).real(), 0.5 * (W(0, 1) + W(1, 0)).real(), W(1, 1).real(),
               W(0, 0).imag(), 0.5 * (W(0, 1) + W(1, 0)).imag(), W(1, 1).imag();
        return out;
    }

    double jacobian_fd(const Coords& c, double h) const {
        Eigen::Matrix<double, 6, 6> J;
        for (int k = 0; k < 6; ++k) {
            Coords cp = c, cm = c;
            cp(k) += h;
            cm(k) -= h;
            J.col(k) = (apply(cp) - apply(cm)) / (2.0 * h);
        }
        return std::abs(J.determinant());
    }

    static double density(const Coords& c) {
        const double det_y = c(3) * c(5) - c(4) * c(4);
        return 1.0 / (det_y * det_y * det_y);
    }
};

void validate_box(int n, const ProductBox& box) {
    const int dim = n * (n + 1);
    if (box.lo.size() != dim || box.hi.size() != dim)
        throw InvariantViolation("product_measure_check: box has wrong dimension");
    if ((box.hi - box.lo).minCoeff() <= 0.0 || box.fiber_hi <= box.fiber_lo)
        throw InvariantViolation("product_measure_check: degenerate box");
    // The PD cone is convex, so PD at every Y-corner implies PD throughout.
    const int m = dim / 2;
    for (long mask = 0; mask < (1L << m); ++mask) {
        Eigen::VectorXd c = box.lo;
        for (int j = 0; j < m; ++j)
            c(m + j) = (mask >> j & 1) ? box.hi(m + j) : box.lo(m + j);
        RealMatrix Y(n, n);
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) Y(i, j) = Y(j, i) = c(m + k), ++k;
        Eigen::LLT<RealMatrix> llt(Y);
        if (llt.info() != Eigen::Success)
            throw InvariantViolation("product_measure_check: box leaves the Siegel space");
    }
}

}  // namespace

MeasureCheckResult product_measure_check(int n, const RealMatrix& M, double r,
                                         const ProductBox& box, std::uint64_t samples,
                                         std::uint64_t seed) {
    (void)r;  // the fiber factor of the action is an exact translation
    if (samples < 1) throw InvariantViolation("product_measure_check: samples must be >= 1");
    validate_box(n, box);
    if (!is_symplectic(M, 1e-6))
        throw InvariantViolation("product_measure_check: M is not symplectic");
    const RealMatrix Minv = symplectic_inverse(M);
    const double h = 1e-5;
    // Independent sample streams for the two sides, so the residual carries
    // genuine Monte-Carlo noise of both estimates and decays as 1/sqrt(N).
    RandomStream rng_e(seed, 0x6d656173);
    RandomStream rng_pre(seed, 0x6d656174);

    double sum_e = 0.0, sum_pre = 0.0;
    if (n == 2) {
        const FastMobius2 inv(Minv);
        for (std::uint64_t s = 0; s < samples; ++s) {
            FastMobius2::Coords c, cp;
            for (int k = 0; k < 6; ++k) c(k) = rng_e.uniform(box.lo(k), box.hi(k));
            for (int k = 0; k < 6; ++k) cp(k) = rng_pre.uniform(box.lo(k), box.hi(k));
            sum_e += FastMobius2::density(c);
            sum_pre += FastMobius2::density(inv.apply(cp)) * inv.jacobian_fd(cp, h);
        }
    } else {
        const int dim = n * (n + 1);
        for (std::uint64_t s = 0; s < samples; ++s) {
            Eigen::VectorXd c(dim), cp(dim);
            for (int k = 0; k < dim; ++k) c(k) = rng_e.uniform(box.lo(k), box.hi(k));
            for (int k = 0; k < dim; ++k) cp(k) = rng_pre.uniform(box.lo(k), box.hi(k));
            sum_e += invariant_density(from_chart_coords(n, c, 1e-6));
            const SiegelPoint Zp = from_chart_coords(n, cp, 1e-6);
            sum_pre += invariant_density(mobius(Minv, Zp, 1e-6)) *
                       mobius_jacobian_fd(Minv, Zp, h);
        }
    }
    const double mean_e = sum_e / static_cast<double>(samples);
    const double mean_pre = sum_pre / static_cast<double>(samples);
    return MeasureCheckResult{std::abs(mean_pre - mean_e) / mean_e, mean_e, mean_pre,
                              samples};
}

}  // namespace sympfib

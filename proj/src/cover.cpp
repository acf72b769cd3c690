#include "sympfib/cover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sympfib {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_to_pi(double x) {
    x = std::fmod(x, kTwoPi);
    if (x > std::numbers::pi) x -= kTwoPi;
    if (x <= -std::numbers::pi) x += kTwoPi;
    return x;
}

}  // namespace

CoverElement cover_identity(int n) {
    return CoverElement{RealMatrix::Identity(2 * n, 2 * n), 0.0};
}

double cover_invariant_residual(const CoverElement& g) {
    const Complex expected = std::polar(1.0, kTwoPi * g.w);
    return std::abs(expected - circle_map(g.M));
}

CoverElement lift(const RealMatrix& M) {
    double w = std::arg(circle_map(M)) / kTwoPi;
    if (w <= -0.5) w += 1.0;  // principal value in (-1/2, 1/2]
    return CoverElement{M, w};
}

CanonicalPath::CanonicalPath(const RealMatrix& M) {
    n_ = static_cast<int>(M.rows()) / 2;
    const RealMatrix P = positive_part(M);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(P);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
        throw NumericError("CanonicalPath: SPD polar factor has no real log");
    p_vectors_ = es.eigenvectors();
    p_log_ = es.eigenvalues().array().log();

    const ComplexMatrix U = unitary_part(M);
    spd_only_ = (U - ComplexMatrix::Identity(n_, n_)).cwiseAbs().maxCoeff() < 1e-12;
    if (spd_only_) {
        u_schur_ = ComplexMatrix::Identity(n_, n_);
        theta_ = Eigen::VectorXd::Zero(n_);
        return;
    }

    Eigen::ComplexSchur<ComplexMatrix> schur(U);
    if (schur.info() != Eigen::Success)
        throw NumericError("CanonicalPath: Schur decomposition of unitary part failed");
    u_schur_ = schur.matrixU();
    theta_.resize(n_);
    std::vector<double> angles(n_);
    for (int j = 0; j < n_; ++j) angles[j] = std::arg(schur.matrixT()(j, j));

    // Place the log branch cut in the middle of the largest spectral gap.
    std::vector<double> sorted = angles;
    std::sort(sorted.begin(), sorted.end());
    double cut = std::numbers::pi;  // default principal branch
    double best_gap = -1.0;
    for (int j = 0; j < n_; ++j) {
        const double lo = sorted[j];
        const double hi = (j + 1 < n_) ? sorted[j + 1] : sorted[0] + kTwoPi;
        if (hi - lo > best_gap) {
            best_gap = hi - lo;
            cut = 0.5 * (lo + hi);
        }
    }
    for (int j = 0; j < n_; ++j) {
        double t = std::fmod(cut - angles[j], kTwoPi);
        if (t < 0) t += kTwoPi;  // t in [0, 2 pi): distance below the cut
        theta_(j) = cut - t;
    }
}

RealMatrix CanonicalPath::at(double t) const {
    const RealMatrix Pt = p_vectors_ *
                          (t * p_log_.array()).exp().matrix().asDiagonal() *
                          p_vectors_.transpose();
    if (spd_only_) return Pt;
    ComplexMatrix phases(n_, n_);
    phases.setZero();
    for (int j = 0; j < n_; ++j) phases(j, j) = std::polar(1.0, t * theta_(j));
    const ComplexMatrix Ut = u_schur_ * phases * u_schur_.adjoint();
    return Pt * embed_unitary(Ut, 1e-6);
}

namespace {

// Unwrapped change of arg circle_map(M1 * path(t)) over [t0, t1]; steps are
// accepted only when the wrapped phase change stays below pi/2.
double tracked_phase_change(const RealMatrix& M1, const CanonicalPath& path,
                            double t0, double t1, double phi0, double phi1, int depth) {
    const double d = wrap_to_pi(phi1 - phi0);
    if (std::abs(d) < std::numbers::pi / 2.0) return d;
    if (depth >= 14)
        throw NumericError("winding_cocycle: phase tracking exceeded max subdivisions");
    const double tm = 0.5 * (t0 + t1);
    const double phim = std::arg(circle_map(M1 * path.at(tm)));
    return tracked_phase_change(M1, path, t0, tm, phi0, phim, depth + 1) +
           tracked_phase_change(M1, path, tm, t1, phim, phi1, depth + 1);
}

}  // namespace

double winding_cocycle(const RealMatrix& M1, const RealMatrix& M2) {
    const int dim = static_cast<int>(M1.rows());
    if ((M1 - RealMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-14) return 0.0;
    const CanonicalPath path(M2);
    // For M2 in Sp cap O the SPD factor of M1 * path(t) is constant, so the
    // tracked difference is identically zero.
    if ((positive_part(M2) - RealMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-12)
        return 0.0;
    const double phi0 = std::arg(circle_map(M1));
    const double phi1 = std::arg(circle_map(M1 * M2));
    const double change = tracked_phase_change(M1, path, 0.0, 1.0, phi0, phi1, 0);
    return (change - path.angle_sum()) / kTwoPi;
}

CoverElement cover_mul(const CoverElement& g1, const CoverElement& g2) {
    return CoverElement{g1.M * g2.M, g1.w + g2.w + winding_cocycle(g1.M, g2.M)};
}

CoverElement cover_inverse(const CoverElement& g) {
    const RealMatrix Minv = symplectic_inverse(g.M);
    return CoverElement{Minv, -g.w - winding_cocycle(g.M, Minv)};
}

CoverElement CenterElement::as_cover(int n) const {
    return CoverElement{sign * RealMatrix::Identity(2 * n, 2 * n), k};
}

std::vector<CenterElement> center_elements(int n, double k_lo, double k_hi) {
    if (n < 1) throw DimensionError("center_elements: n must be >= 1");
    std::vector<CenterElement> out;
    const long lo = static_cast<long>(std::ceil(2.0 * k_lo));
    const long hi = static_cast<long>(std::floor(2.0 * k_hi));
    for (long twice_k = lo; twice_k <= hi; ++twice_k) {
        const double k = 0.5 * twice_k;
        if (n % 2 == 1) {
            // n odd: integer lifts are +id, half-integer lifts are -id.
            out.push_back(CenterElement{(twice_k % 2 == 0) ? +1 : -1, k});
        } else if (twice_k % 2 == 0) {
            // n even: both signs live over every integer index.
            out.push_back(CenterElement{+1, k});
            out.push_back(CenterElement{-1, k});
        }
    }
    return out;
}

CoverElement scalar_lift(double a, int n) {
    const ComplexMatrix U = std::polar(1.0, a) * ComplexMatrix::Identity(n, n);
    return CoverElement{embed_unitary(U, 1e-12), n * a / kTwoPi};
}

std::pair<double, CoverElement> hr_factor(const CoverElement& g) {
    const int n = static_cast<int>(g.M.rows()) / 2;
    const double a = kTwoPi * g.w / n;
    const CoverElement inv_scalar = scalar_lift(-a, n);
    // Right scalar factor is unitary and central, so the cocycle vanishes
    // and the matrices commute.
    return {a, CoverElement{g.M * inv_scalar.M, g.w + inv_scalar.w}};
}

}  // namespace sympfib

#include "sympfib/siegel.hpp"

#include <cmath>

namespace sympfib {

bool imag_positive_definite(const ComplexMatrix& Z) {
    const RealMatrix Y = Z.imag();
    Eigen::LLT<RealMatrix> llt(Y);
    if (llt.info() != Eigen::Success) return false;
    return RealMatrix(llt.matrixL()).diagonal().minCoeff() > 1e-12;
}

SiegelPoint::SiegelPoint(ComplexMatrix z, double tau) : Z(std::move(z)) {
    if (Z.rows() != Z.cols()) throw DimensionError("SiegelPoint: matrix not square");
    if ((Z - Z.transpose()).cwiseAbs().maxCoeff() > tau)
        throw InvariantViolation("SiegelPoint: matrix is not symmetric");
    if (!imag_positive_definite(Z))
        throw InvariantViolation("SiegelPoint: imaginary part is not positive definite");
}

SiegelPoint SiegelPoint::basepoint(int n) {
    return SiegelPoint(Complex(0, 1) * ComplexMatrix::Identity(n, n));
}

GrassmannPoint::GrassmannPoint(ComplexMatrix t, ComplexMatrix b)
    : top(std::move(t)), bottom(std::move(b)) {
    if (top.rows() != top.cols() || bottom.rows() != bottom.cols() ||
        top.rows() != bottom.rows())
        throw DimensionError("GrassmannPoint: blocks must be square of equal size");
    const int n = static_cast<int>(top.rows());
    ComplexMatrix stacked(2 * n, n);
    stacked.topRows(n) = top;
    stacked.bottomRows(n) = bottom;
    Eigen::JacobiSVD<ComplexMatrix> svd(stacked);
    const auto& s = svd.singularValues();
    if (s(n - 1) <= 1e-10 * s(0))
        throw InvariantViolation("GrassmannPoint: stacked matrix is rank deficient");
}

// Chart action of M on an arbitrary n x n complex matrix.
static ComplexMatrix chart_act(const RealMatrix& M, const ComplexMatrix& Z) {
    const Blocks b = blocks(M);
    const ComplexMatrix num = b.A.cast<Complex>() * Z + b.B.cast<Complex>();
    const ComplexMatrix den = b.C.cast<Complex>() * Z + b.D.cast<Complex>();
    Eigen::PartialPivLU<ComplexMatrix> lu(den);
    const double scale = den.cwiseAbs().maxCoeff();
    if (std::abs(lu.determinant()) < 1e-13 * std::pow(scale, den.rows()))
        throw NumericError("mobius: CZ + D is numerically singular");
    return num * lu.inverse();
}

SiegelPoint mobius(const RealMatrix& M, const SiegelPoint& Z, double tau) {
    const ComplexMatrix W = chart_act(M, Z.Z);
    return SiegelPoint(0.5 * (W + W.transpose()), tau);
}

GrassmannPoint grassmann_act(const RealMatrix& M, const GrassmannPoint& P) {
    const Blocks b = blocks(M);
    return GrassmannPoint(b.A.cast<Complex>() * P.top + b.B.cast<Complex>() * P.bottom,
                          b.C.cast<Complex>() * P.top + b.D.cast<Complex>() * P.bottom);
}

GrassmannPoint grassmann_embed(const SiegelPoint& Z) {
    return GrassmannPoint(Z.Z, ComplexMatrix::Identity(Z.n(), Z.n()));
}

bool grassmann_equal(const GrassmannPoint& P, const GrassmannPoint& Q, double tau) {
    const int n = static_cast<int>(P.top.rows());
    Eigen::FullPivLU<ComplexMatrix> luP(P.bottom), luQ(Q.bottom);
    if (luP.isInvertible() && luQ.isInvertible()) {
        const ComplexMatrix zp = P.top * luP.inverse();
        const ComplexMatrix zq = Q.top * luQ.inverse();
        return (zp - zq).cwiseAbs().maxCoeff() <= tau;
    }
    // Chart-free fallback: principal angles between column spans.
    auto basis = [n](const GrassmannPoint& G) {
        ComplexMatrix stacked(2 * n, n);
        stacked.topRows(n) = G.top;
        stacked.bottomRows(n) = G.bottom;
        Eigen::HouseholderQR<ComplexMatrix> qr(stacked);
        return ComplexMatrix(qr.householderQ() * ComplexMatrix::Identity(2 * n, n));
    };
    Eigen::JacobiSVD<ComplexMatrix> svd(basis(P).adjoint() * basis(Q));
    return 1.0 - svd.singularValues().minCoeff() <= tau;
}

RealMatrix transitivity_witness(const SiegelPoint& Z) {
    Eigen::LLT<RealMatrix> llt(Z.Y());
    if (llt.info() != Eigen::Success)
        throw InvariantViolation("transitivity_witness: Cholesky of Im Z failed");
    const RealMatrix S = llt.matrixL();
    return gen_N(Z.X()) * gen_D(S);
}

std::optional<ComplexMatrix> stabilizer_test(const RealMatrix& M, double tau) {
    const int n = static_cast<int>(M.rows()) / 2;
    const SiegelPoint base = SiegelPoint::basepoint(n);
    const SiegelPoint image = mobius(M, base, 1e-6);
    if ((image.Z - base.Z).cwiseAbs().maxCoeff() > tau) return std::nullopt;
    const Blocks b = blocks(M);
    return ComplexMatrix(b.A.cast<Complex>() + Complex(0, 1) * b.C.cast<Complex>());
}

ComplexMatrix vec1() {
    ComplexMatrix V(2, 2);
    V << 0, 1, -1, 0;
    return V;
}

TangentVector pushforward(const RealMatrix& M, const TangentVector& V) {
    const Blocks b = blocks(M);
    const ComplexMatrix J = b.C.cast<Complex>() * V.base.Z + b.D.cast<Complex>();
    const ComplexMatrix Jinv = J.inverse();
    return TangentVector{Jinv.transpose() * V.V * Jinv, mobius(M, V.base)};
}

ComplexMatrix pushforward_fd(const RealMatrix& M, const TangentVector& V, double h) {
    const ComplexMatrix plus = chart_act(M, V.base.Z + h * V.V);
    const ComplexMatrix minus = chart_act(M, V.base.Z - h * V.V);
    return (plus - minus) / (2.0 * h);
}

NormalBundleResult normal_bundle_check(const RealMatrix& M, const SiegelPoint& Z) {
    if (Z.n() != 2 || M.rows() != 4)
        throw DimensionError("normal_bundle_check: only n = 2 is supported");
    const ComplexMatrix W = pushforward(M, TangentVector{vec1(), Z}).V;
    const Complex c = (W(0, 1) - W(1, 0)) / 2.0;
    const ComplexMatrix off = W - c * vec1();
    return NormalBundleResult{c, off.cwiseAbs().maxCoeff()};
}

double invariant_density(const SiegelPoint& Z) {
    return std::pow(Z.Y().determinant(), -(Z.n() + 1));
}

Eigen::VectorXd chart_coords(const SiegelPoint& Z) {
    const int n = Z.n();
    const int m = n * (n + 1) / 2;
    Eigen::VectorXd c(2 * m);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) c(k++) = Z.Z(i, j).real();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) c(k++) = Z.Z(i, j).imag();
    return c;
}

SiegelPoint from_chart_coords(int n, const Eigen::VectorXd& c, double tau) {
    const int m = n * (n + 1) / 2;
    if (c.size() != 2 * m) throw DimensionError("from_chart_coords: wrong coordinate count");
    ComplexMatrix Z(n, n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) Z(i, j) = Z(j, i) = Complex(c(k), c(m + k)), ++k;
    return SiegelPoint(Z, tau);
}

double mobius_jacobian_fd(const RealMatrix& M, const SiegelPoint& Z, double h) {
    const int n = Z.n();
    const int dim = n * (n + 1);
    const Eigen::VectorXd c0 = chart_coords(Z);
    RealMatrix J(dim, dim);
    for (int k = 0; k < dim; ++k) {
        Eigen::VectorXd cp = c0, cm = c0;
        cp(k) += h;
        cm(k) -= h;
        const Eigen::VectorXd fp = chart_coords(mobius(M, from_chart_coords(n, cp, 1e-6)));
        const Eigen::VectorXd fm = chart_coords(mobius(M, from_chart_coords(n, cm, 1e-6)));
        J.col(k) = (fp - fm) / (2.0 * h);
    }
    return std::abs(J.determinant());
}

}  // namespace sympfib

#include "sympfib/symplectic.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

namespace sympfib {

RealMatrix omega(int n) {
    if (n < 1) throw DimensionError("omega: n must be >= 1");
    RealMatrix Om = RealMatrix::Zero(2 * n, 2 * n);
    Om.topRightCorner(n, n) = RealMatrix::Identity(n, n);
    Om.bottomLeftCorner(n, n) = -RealMatrix::Identity(n, n);
    return Om;
}

static int half_dim(const RealMatrix& M, const char* who) {
    if (M.rows() != M.cols()) throw DimensionError(std::string(who) + ": matrix not square");
    if (M.rows() % 2 != 0) throw DimensionError(std::string(who) + ": odd dimension");
    return static_cast<int>(M.rows()) / 2;
}

double symplectic_residual(const RealMatrix& M) {
    const int n = half_dim(M, "symplectic_residual");
    const RealMatrix Om = omega(n);
    return (M.transpose() * Om * M - Om).cwiseAbs().maxCoeff();
}

bool is_symplectic(const RealMatrix& M, double tau) {
    return symplectic_residual(M) <= tau;
}

RealMatrix gen_D(const RealMatrix& A) {
    if (A.rows() != A.cols()) throw DimensionError("gen_D: A not square");
    Eigen::FullPivLU<RealMatrix> lu(A);
    if (!lu.isInvertible()) throw InvariantViolation("gen_D: A is singular");
    const int n = static_cast<int>(A.rows());
    RealMatrix M = RealMatrix::Zero(2 * n, 2 * n);
    M.topLeftCorner(n, n) = A;
    M.bottomRightCorner(n, n) = lu.inverse().transpose();
    return M;
}

RealMatrix gen_N(const RealMatrix& B, double tau) {
    if (B.rows() != B.cols()) throw DimensionError("gen_N: B not square");
    if ((B - B.transpose()).cwiseAbs().maxCoeff() > tau)
        throw InvariantViolation("gen_N: B is not symmetric");
    const int n = static_cast<int>(B.rows());
    RealMatrix M = RealMatrix::Identity(2 * n, 2 * n);
    M.topRightCorner(n, n) = (B + B.transpose()) / 2.0;
    return M;
}

Blocks blocks(const RealMatrix& M) {
    const int n = half_dim(M, "blocks");
    return Blocks{M.topLeftCorner(n, n), M.topRightCorner(n, n),
                  M.bottomLeftCorner(n, n), M.bottomRightCorner(n, n)};
}

double unitarity_residual(const ComplexMatrix& U) {
    const auto I = ComplexMatrix::Identity(U.rows(), U.cols());
    return (U.adjoint() * U - I).cwiseAbs().maxCoeff();
}

RealMatrix embed_unitary(const ComplexMatrix& U, double tau) {
    if (U.rows() != U.cols()) throw DimensionError("embed_unitary: U not square");
    if (unitarity_residual(U) > tau)
        throw InvariantViolation("embed_unitary: input is not unitary");
    const int n = static_cast<int>(U.rows());
    const RealMatrix A = U.real();
    const RealMatrix B = U.imag();
    RealMatrix M(2 * n, 2 * n);
    M.topLeftCorner(n, n) = A;
    M.topRightCorner(n, n) = -B;
    M.bottomLeftCorner(n, n) = B;
    M.bottomRightCorner(n, n) = A;
    return M;
}

// Newton iteration for the orthogonal polar factor.
static RealMatrix orthogonal_polar_factor(const RealMatrix& M) {
    RealMatrix X = M;
    const double threshold = 1e-13;
    for (int it = 0; it < 100; ++it) {
        RealMatrix next = 0.5 * (X + X.inverse().transpose());
        const double step = (next - X).cwiseAbs().maxCoeff();
        X = next;
        if (step < threshold) return X;
    }
    std::ostringstream msg;
    msg << "unitary_part: polar Newton iteration did not converge, residual "
        << (X * X.transpose() - RealMatrix::Identity(X.rows(), X.cols())).cwiseAbs().maxCoeff();
    throw NumericError(msg.str());
}

ComplexMatrix unitary_part(const RealMatrix& M) {
    const int n = half_dim(M, "unitary_part");
    const RealMatrix K = orthogonal_polar_factor(M);
    // K lies in Sp cap O, so it has the block form [[A, -B], [B, A]].
    const RealMatrix A = K.topLeftCorner(n, n);
    const RealMatrix B = K.bottomLeftCorner(n, n);
    return A.cast<Complex>() + Complex(0, 1) * B.cast<Complex>();
}

RealMatrix positive_part(const RealMatrix& M) {
    const RealMatrix K = orthogonal_polar_factor(M);
    RealMatrix P = M * K.transpose();
    return 0.5 * (P + P.transpose());
}

Complex circle_map(const RealMatrix& M) {
    const Complex d = unitary_part(M).determinant();
    return d / std::abs(d);
}

RealMatrix symplectic_inverse(const RealMatrix& M) {
    const int n = half_dim(M, "symplectic_inverse");
    const RealMatrix Om = omega(n);
    return -Om * M.transpose() * Om;
}

double lie_algebra_residual(const RealMatrix& X) {
    const int n = half_dim(X, "lie_algebra_residual");
    const RealMatrix S = omega(n) * X;
    return (S - S.transpose()).cwiseAbs().maxCoeff();
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t substream)
    : gen_(seed ^ (substream * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull)) {}

double RandomStream::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(gen_);
}

RealMatrix RandomStream::symmetric(int n, double scale) {
    RealMatrix S(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) S(i, j) = S(j, i) = scale * uniform(-1.0, 1.0);
    return S;
}

RealMatrix RandomStream::symplectic(int n) {
    const RealMatrix S = symmetric(2 * n, 1.0 / (2 * n));
    const RealMatrix X = -omega(n) * S;  // Omega X = S symmetric, so X in sp(2n,R)
    return X.exp();
}

ComplexMatrix RandomStream::unitary(int n) {
    ComplexMatrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    ComplexMatrix H = 0.5 * (G - G.adjoint());
    return H.exp();
}

}  // namespace sympfib

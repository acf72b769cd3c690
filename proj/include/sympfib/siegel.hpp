#pragma once

#include <optional>

#include "sympfib/symplectic.hpp"

namespace sympfib {

// A point Z = X + iY of the Siegel upper half-space: Z symmetric, Y positive
// definite. Validity is checked on construction.
struct SiegelPoint {
    ComplexMatrix Z;

    SiegelPoint(ComplexMatrix z, double tau = 1e-9);

    int n() const { return static_cast<int>(Z.rows()); }
    RealMatrix X() const { return Z.real(); }
    RealMatrix Y() const { return Z.imag(); }

    static SiegelPoint basepoint(int n);  // iI_n
};

bool imag_positive_definite(const ComplexMatrix& Z);

// A point of the Grassmannian chart: the span of the stacked 2n x n matrix
// [top; bottom], up to the right GL(n,C) action.
struct GrassmannPoint {
    ComplexMatrix top, bottom;

    GrassmannPoint(ComplexMatrix t, ComplexMatrix b);
};

// Z |-> (AZ + B)(CZ + D)^{-1}, output symmetrized.
SiegelPoint mobius(const RealMatrix& M, const SiegelPoint& Z, double tau = 1e-9);

GrassmannPoint grassmann_act(const RealMatrix& M, const GrassmannPoint& P);

// Embedding Z |-> [Z; I] of the chart.
GrassmannPoint grassmann_embed(const SiegelPoint& Z);

// Equality modulo right GL(n,C): normalize by bottom^{-1} when well
// conditioned, else compare column spans via principal angles.
bool grassmann_equal(const GrassmannPoint& P, const GrassmannPoint& Q, double tau = 1e-8);

// M with mobius(M, iI_n) = Z; built as gen_N(X) * gen_D(S), Y = S S^T.
RealMatrix transitivity_witness(const SiegelPoint& Z);

// If M fixes iI_n, the unitary U with embed_unitary(U) = M; otherwise empty.
std::optional<ComplexMatrix> stabilizer_test(const RealMatrix& M, double tau = 1e-8);

// Tangent vector in the ambient chart M_n(C), based at a Siegel point.
struct TangentVector {
    ComplexMatrix V;
    SiegelPoint base;
};

// The constant antisymmetric section spanning the n=2 normal bundle.
ComplexMatrix vec1();

// Tangent map of the Moebius action: W = (CZ+D)^{-T} V (CZ+D)^{-1},
// based at mobius(M, Z).
TangentVector pushforward(const RealMatrix& M, const TangentVector& V);

// Finite-difference derivative of s |-> mobius-like chart action of M along V
// (no symmetrization, so it applies to non-symmetric V too).
ComplexMatrix pushforward_fd(const RealMatrix& M, const TangentVector& V, double h);

struct NormalBundleResult {
    Complex coefficient;  // component of the image of vec1 on span_C{vec1}
    double residual;      // max-norm of the part off that span
};

// n = 2 only: decompose pushforward(M, vec1) against span{vec1, i vec1}.
NormalBundleResult normal_bundle_check(const RealMatrix& M, const SiegelPoint& Z);

// det(Im Z)^{-(n+1)}, the density of the Sp-invariant reference measure in
// chart coordinates.
double invariant_density(const SiegelPoint& Z);

// Real chart coordinates (upper triangle of X, then of Y), n(n+1) of them.
Eigen::VectorXd chart_coords(const SiegelPoint& Z);
SiegelPoint from_chart_coords(int n, const Eigen::VectorXd& c, double tau = 1e-9);

// |det| of the finite-difference Jacobian of Z |-> mobius(M, Z) in chart
// coordinates; the oracle for invariance of invariant_density.
double mobius_jacobian_fd(const RealMatrix& M, const SiegelPoint& Z, double h);

}  // namespace sympfib

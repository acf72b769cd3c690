#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

#include "sympfib/errors.hpp"

namespace sympfib {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Default tolerances; every downstream module takes these as parameters.
struct Tolerances {
    double tau_sym = 1e-9;  // membership in Sp(2n,R), U(n)
    double tau_act = 1e-8;  // action and equivariance residuals
    double tau_cov = 1e-8;  // universal-cover winding invariant
    int fiber_exponent = 1; // power of det(CZ+D) driving the fiber rotation
};

// The standard symplectic form [[0, I_n], [-I_n, 0]].
RealMatrix omega(int n);

// Max-norm residual of M^T * Omega * M - Omega.
double symplectic_residual(const RealMatrix& M);

// Throws DimensionError for odd-dimensional or non-square input.
bool is_symplectic(const RealMatrix& M, double tau = 1e-9);

// Block-diagonal generator [[A, 0], [0, A^{-T}]]; A must be invertible.
RealMatrix gen_D(const RealMatrix& A);

// Shear generator [[I, B], [0, I]]; B must be symmetric.
RealMatrix gen_N(const RealMatrix& B, double tau = 1e-9);

// Blocks of a 2n x 2n matrix in the order used by the Moebius action.
struct Blocks {
    RealMatrix A, B, C, D;
};
Blocks blocks(const RealMatrix& M);

// U(n) -> Sp(2n,R) cap O(2n,R), U = A + iB  |->  [[A, -B], [B, A]].
// A group homomorphism onto the stabilizer of iI_n.
RealMatrix embed_unitary(const ComplexMatrix& U, double tau = 1e-9);

double unitarity_residual(const ComplexMatrix& U);

// Orthogonal polar factor of a symplectic M = P * K (P SPD symplectic,
// K in Sp cap O), returned in its U(n) identification. Newton iteration
// X <- (X + X^{-T}) / 2.
ComplexMatrix unitary_part(const RealMatrix& M);

// The SPD polar factor P with M = P * K.
RealMatrix positive_part(const RealMatrix& M);

// rho(M) = det(unitary_part(M)), a point of S^1. Induces the isomorphism
// pi_1(Sp(2n,R)) ~ Z used throughout the cover module.
Complex circle_map(const RealMatrix& M);

// Exact inverse within Sp: M^{-1} = -Omega M^T Omega.
RealMatrix symplectic_inverse(const RealMatrix& M);

// Deterministic per-purpose random streams. Substreams are derived from
// (seed, counter) so adding call sites never perturbs existing streams.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t substream);

    double uniform(double lo, double hi);

    // exp(X) for X in sp(2n,R): entries of the symmetric seed drawn
    // uniform in [-1,1] scaled by 1/(2n), so samples stay well conditioned.
    RealMatrix symplectic(int n);

    // exp of a random anti-Hermitian matrix.
    ComplexMatrix unitary(int n);

    RealMatrix symmetric(int n, double scale = 1.0);

  private:
    std::mt19937_64 gen_;
};

// sp(2n,R) membership residual: || (Omega X) - (Omega X)^T ||_max.
double lie_algebra_residual(const RealMatrix& X);

}  // namespace sympfib

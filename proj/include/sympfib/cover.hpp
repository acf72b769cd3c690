#pragma once

#include <utility>
#include <vector>

#include "sympfib/symplectic.hpp"

namespace sympfib {

// A point of the universal cover of Sp(2n,R): a symplectic matrix together
// with an unwrapped winding coordinate, in revolutions, satisfying
// e^{2 pi i w} = circle_map(M). Since circle_map induces an isomorphism on
// fundamental groups, the pair represents the cover faithfully.
struct CoverElement {
    RealMatrix M;
    double w = 0.0;
};

CoverElement cover_identity(int n);

// |e^{2 pi i w} - circle_map(M)|.
double cover_invariant_residual(const CoverElement& g);

// Basepoint lift: w is the principal value of arg(circle_map(M)) / 2 pi
// in (-1/2, 1/2].
CoverElement lift(const RealMatrix& M);

// The canonical path t |-> P^t K(t) from the identity to M = P K, where
// P^t is the SPD matrix power and K(t) the unitary geodesic from I to K.
// The log branch is cut in the largest spectral gap of the unitary part,
// so paths through eigenvalue -1 are resolved deterministically.
class CanonicalPath {
  public:
    explicit CanonicalPath(const RealMatrix& M);

    RealMatrix at(double t) const;

    // arg circle_map(at(t)) = t * angle_sum(), exactly along this path.
    double angle_sum() const { return theta_.sum(); }

    bool positive_definite_start() const { return spd_only_; }
    int n() const { return n_; }

  private:
    int n_;
    bool spd_only_;                 // K = I, the path is P^t alone
    RealMatrix p_vectors_;          // eigenvectors of the SPD part
    Eigen::VectorXd p_log_;         // log-eigenvalues of the SPD part
    ComplexMatrix u_schur_;         // Schur basis of the unitary part
    Eigen::VectorXd theta_;         // branch-adjusted angles of its spectrum
};

// The continuous cocycle beta(M1, M2) in revolutions: the winding of
// t |-> arg circle_map(M1 * path(t)) - arg circle_map(path(t)) along the
// canonical path of M2. beta(I, .) = beta(., I) = 0.
double winding_cocycle(const RealMatrix& M1, const RealMatrix& M2);

// (M1 M2, w1 + w2 + beta(M1, M2)).
CoverElement cover_mul(const CoverElement& g1, const CoverElement& g2);

CoverElement cover_inverse(const CoverElement& g);

// A point of the center: sign of the underlying +-id and the lift index k.
// For n odd, sign -1 forces k in Z + 1/2; otherwise k in Z.
struct CenterElement {
    int sign;  // +1 or -1
    double k;  // lift index, a half-integer

    CoverElement as_cover(int n) const;
};

// All center elements with lift index in [k_lo, k_hi].
std::vector<CenterElement> center_elements(int n, double k_lo, double k_hi);

// The one-parameter central subgroup of the lifted U(n):
// a |-> (embed_unitary(e^{ia} I_n), n a / 2 pi). Exact homomorphism in w.
CoverElement scalar_lift(double a, int n);

// Unique factorization of a lifted unitary as scalar_lift(a) * (SU-part with
// w = 0); realizes the direct product structure of the lifted U(n).
std::pair<double, CoverElement> hr_factor(const CoverElement& g);

}  // namespace sympfib

#include "sympfib/extension.hpp"

#include <cmath>

namespace sympfib {

double fiber_unit_per_winding(int n) {
    if (n < 1) throw DimensionError("fiber_unit_per_winding: n must be >= 1");
    return (n % 2 == 1) ? 2.0 : 1.0;
}

double iota(const CenterElement& z, int n) {
    // The R-coordinate of z is the fiber translation it induces; by the
    // z |-> z^{-1} behavior of the fiber this is minus the winding in
    // normalized units. The image lattice is still generated by 1.
    return -fiber_unit_per_winding(n) * z.k;
}

ExtElement::ExtElement(CoverElement g, double r, int n) : g_(std::move(g)), r_(r), n_(n) {
    if (g_.M.rows() != 2 * n) throw DimensionError("ExtElement: matrix size does not match n");
    // Reduce r into [0, 1) by powers of the generating center element
    // ((id, 1) for n even, (-id, 1/2) for n odd), whose iota is -1: cutting
    // m off r multiplies by the center lift of winding -m in raw units.
    const double m = std::floor(r_);
    r_ -= m;
    if (n_ % 2 == 1) {
        g_.w -= 0.5 * m;
        if (std::fmod(std::fmod(m, 2.0) + 2.0, 2.0) == 1.0) g_.M = -g_.M;
    } else {
        g_.w -= m;
        // Leftover torsion ambiguity (the 0-th lift of -id has iota = 0):
        // canonicalize the matrix sign.
        for (int i = 0; i < g_.M.rows(); ++i) {
            for (int j = 0; j < g_.M.cols(); ++j) {
                if (std::abs(g_.M(i, j)) > 1e-12) {
                    if (g_.M(i, j) < 0) g_.M = -g_.M;
                    return;
                }
            }
        }
    }
}

ExtElement ExtElement::identity(int n) {
    return ExtElement(cover_identity(n), 0.0, n);
}

ExtElement ext_make(const CoverElement& g, double r, int n) {
    return ExtElement(g, r, n);
}

ExtElement ext_mul(const ExtElement& e1, const ExtElement& e2) {
    if (e1.n() != e2.n()) throw DimensionError("ext_mul: mismatched n");
    return ExtElement(cover_mul(e1.g(), e2.g()), e1.r() + e2.r(), e1.n());
}

double automorphy_phase(const CoverElement& g, const SiegelPoint& Z, int fiber_exponent) {
    // Write Z = P_Z . iI with P_Z the unique positive definite symplectic
    // moving the basepoint there. The cocycle identity for the winding
    // cocycle makes (g, Z) |-> kappa (w + beta(M, P_Z)) an exact action
    // cocycle: orthogonal stabilizer factors drop out of beta, so the value
    // only depends on Z, and at Z = iI it reduces to kappa w.
    const int n = Z.n();
    const RealMatrix section = positive_part(transitivity_witness(Z));
    const double drift = winding_cocycle(g.M, section);
    return fiber_unit_per_winding(n) * (g.w + fiber_exponent * drift);
}

ModelPoint ext_act(const ExtElement& e, const ModelPoint& p, int fiber_exponent) {
    const SiegelPoint Z = mobius(e.g().M, p.Z, 1e-6);
    const double t = p.t - automorphy_phase(e.g(), p.Z, fiber_exponent) + e.r();
    return ModelPoint{Z, t};
}

RealMatrix psp_canonical(const RealMatrix& M) {
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (std::abs(M(i, j)) > 1e-12) return (M(i, j) < 0) ? RealMatrix(-M) : M;
    return M;
}

RealMatrix eta(const ExtElement& e) {
    return psp_canonical(e.g().M);
}

SiegelPoint bundle_projection(const ModelPoint& p) {
    return p.Z;
}

bool stabilizer_check(const ExtElement& e, double tau) {
    const ModelPoint p0 = ModelPoint::basepoint(e.n());
    const ModelPoint q = ext_act(e, p0);
    return (q.Z.Z - p0.Z.Z).cwiseAbs().maxCoeff() <= tau && std::abs(q.t) <= tau;
}

}  // namespace sympfib

#pragma once

#include "sympfib/cover.hpp"
#include "sympfib/siegel.hpp"

namespace sympfib {

// Conversion from winding coordinates (revolutions) to fiber units in which
// the generator of the image of the center has length 1. Depends on the
// parity of n: the generating lift index is 1 for n even and 1/2 for n odd.
double fiber_unit_per_winding(int n);

// The image of a center element in the fiber line, in normalized units:
// the translation it induces on the fiber (minus the normalized winding).
// For n even the torsion element (the 0-th lift of -id) maps to 0.
double iota(const CenterElement& z, int n);

// Element of the central extension in normal form: a cover element plus a
// fiber translation r in [0, 1), reduced by (g, r) ~ (g z, r - iota(z)).
// For n even the leftover torsion ambiguity is resolved by a deterministic
// sign choice on the matrix.
class ExtElement {
  public:
    ExtElement(CoverElement g, double r, int n);  // this is theta, reducing to normal form

    const CoverElement& g() const { return g_; }
    double r() const { return r_; }
    int n() const { return n_; }

    static ExtElement identity(int n);

  private:
    CoverElement g_;
    double r_;
    int n_;
};

ExtElement ext_make(const CoverElement& g, double r, int n);

ExtElement ext_mul(const ExtElement& e1, const ExtElement& e2);

// Point of the model space: a Siegel point plus a fiber coordinate in
// normalized units.
struct ModelPoint {
    SiegelPoint Z;
    double t = 0.0;

    static ModelPoint basepoint(int n) { return ModelPoint{SiegelPoint::basepoint(n), 0.0}; }
};

// The lifted automorphy phase, in normalized fiber units: with P_Z the
// unique positive definite symplectic sending the basepoint iI_n to Z, this
// is kappa (w + beta(M, P_Z)), where beta is the winding cocycle. At the
// basepoint it reduces to kappa w.
double automorphy_phase(const CoverElement& g, const SiegelPoint& Z, int fiber_exponent = 1);

// (g, r) . (Z, t) = (mobius(M, Z), t - automorphy_phase(g, Z) + r).
ModelPoint ext_act(const ExtElement& e, const ModelPoint& p, int fiber_exponent = 1);

// Projection to PSp(2n,R): the matrix of pi(g) with the sign canonicalized
// so the first nonzero entry (row-major) is positive.
RealMatrix eta(const ExtElement& e);

RealMatrix psp_canonical(const RealMatrix& M);

// nu: (Z, t) |-> Z.
SiegelPoint bundle_projection(const ModelPoint& p);

// True iff e fixes the basepoint (iI_n, 0) within tau.
bool stabilizer_check(const ExtElement& e, double tau = 1e-8);

// Summary data of a Seifert-like subgroup; the lattices themselves carry no
// explicit generators here. Rationals are passed as strings "p/q" at the
// interface layer; see volume.hpp for exact arithmetic.
struct SeifertDescriptor {
    std::string fiber_covolume;  // covolume of the fiber intersection, "p/q"
    std::string base_euler;      // Euler characteristic of the base image, "p/q"
    bool arises_from_psp = false;
};

}  // namespace sympfib

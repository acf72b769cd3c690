#include "sympfib/checks.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace sympfib::checks {

namespace {

RealMatrix random_invertible(RandomStream& rng, int n, double scale) {
    RealMatrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = scale * rng.uniform(-1.0, 1.0);
    return G.exp();
}

}  // namespace

RealMatrix random_word(RandomStream& rng, int n, int max_len) {
    const int len = 1 + static_cast<int>(rng.uniform(0.0, 1.0) * max_len) % max_len;
    RealMatrix M = RealMatrix::Identity(2 * n, 2 * n);
    for (int i = 0; i < len; ++i) {
        const double pick = rng.uniform(0.0, 3.0);
        if (pick < 1.0)
            M *= gen_D(random_invertible(rng, n, 0.4));
        else if (pick < 2.0)
            M *= gen_N(rng.symmetric(n, 0.5));
        else
            M *= omega(n);
    }
    return M;
}

SiegelPoint random_siegel(RandomStream& rng, int n) {
    const RealMatrix X = rng.symmetric(n, 0.5);
    RealMatrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rng.uniform(-0.5, 0.5);
    const RealMatrix Y = A * A.transpose() + 0.2 * RealMatrix::Identity(n, n);
    return SiegelPoint(X.cast<Complex>() + Complex(0, 1) * Y.cast<Complex>());
}

MobiusReport mobius_axioms(int n, std::uint64_t seed, int samples, double tau_act) {
    RandomStream rng(seed, 0x6d6f62);
    MobiusReport rep;
    for (int s = 0; s < samples; ++s) {
        const RealMatrix M1 = rng.symplectic(n);
        const RealMatrix M2 = rng.symplectic(n);
        const SiegelPoint Z = random_siegel(rng, n);
        const SiegelPoint lhs = mobius(M1 * M2, Z);
        const SiegelPoint rhs = mobius(M1, mobius(M2, Z));
        rep.composition_residual =
            std::max(rep.composition_residual, (lhs.Z - rhs.Z).cwiseAbs().maxCoeff());

        // Positive sample: an embedded unitary must be recognized and recovered.
        const ComplexMatrix U = rng.unitary(n);
        const auto found = stabilizer_test(embed_unitary(U, 1e-6), tau_act);
        if (!found) {
            ++rep.false_negatives;
        } else {
            rep.recover_residual =
                std::max(rep.recover_residual, (*found - U).cwiseAbs().maxCoeff());
        }

        // Negative sample: a shear with a visible offset moves the basepoint.
        RealMatrix B = rng.symmetric(n, 1.0);
        B(0, 0) += (B(0, 0) >= 0 ? 0.5 : -0.5);
        if (stabilizer_test(gen_N(B), tau_act)) ++rep.false_positives;
    }
    return rep;
}

NormalBundleReport normal_bundle_sweep(std::uint64_t seed, int words, int points) {
    RandomStream rng(seed, 0x6e62);
    NormalBundleReport rep;
    std::vector<SiegelPoint> pool;
    pool.reserve(points);
    for (int i = 0; i < points; ++i) pool.push_back(random_siegel(rng, 2));
    for (int w = 0; w < words; ++w) {
        const RealMatrix M = random_word(rng, 2, 6);
        const SiegelPoint& Z = pool[static_cast<std::size_t>(
            rng.uniform(0.0, static_cast<double>(points) - 0.5))];
        const NormalBundleResult res = normal_bundle_check(M, Z);
        const Blocks b = blocks(M);
        const Complex expected =
            1.0 / (b.C.cast<Complex>() * Z.Z + b.D.cast<Complex>()).determinant();
        rep.max_off_residual = std::max(rep.max_off_residual, res.residual);
        rep.max_coeff_rel_err =
            std::max(rep.max_coeff_rel_err,
                     std::abs(res.coefficient - expected) / std::abs(expected));
    }
    return rep;
}

PushforwardReport pushforward_generator_cases(std::uint64_t seed, int instances) {
    RandomStream rng(seed, 0x7066);
    PushforwardReport rep;
    const ComplexMatrix v1 = vec1();
    auto coeff = [&](const RealMatrix& M, const SiegelPoint& Z) {
        const ComplexMatrix W = pushforward(M, TangentVector{v1, Z}).V;
        return (W(0, 1) - W(1, 0)) / 2.0;
    };
    for (int s = 0; s < instances; ++s) {
        const SiegelPoint Z = random_siegel(rng, 2);

        const Complex c_omega = coeff(omega(2), Z);
        const Complex want_omega = 1.0 / Z.Z.determinant();
        rep.omega_rel_err = std::max(
            rep.omega_rel_err, std::abs(c_omega - want_omega) / std::abs(want_omega));

        const RealMatrix A = random_invertible(rng, 2, 0.6);
        const Complex c_diag = coeff(gen_D(A), Z);
        const Complex want_diag = A.determinant();
        rep.diag_rel_err = std::max(rep.diag_rel_err,
                                    std::abs(c_diag - want_diag) / std::abs(want_diag));

        const Complex c_shear = coeff(gen_N(rng.symmetric(2, 1.0)), Z);
        rep.shear_rel_err = std::max(rep.shear_rel_err, std::abs(c_shear - 1.0));
    }
    return rep;
}

CoverReport cover_soundness(int n, std::uint64_t seed, int products) {
    RandomStream rng(seed, 0x636f76);
    CoverReport rep;
    auto random_cover = [&] { return lift(rng.symplectic(n)); };

    CoverElement acc = cover_identity(n);
    for (int s = 0; s < products; ++s) {
        acc = cover_mul(acc, random_cover());
        rep.invariant_residual =
            std::max(rep.invariant_residual, cover_invariant_residual(acc));
        // Keep the running product bounded.
        if ((s + 1) % 16 == 0) acc = cover_identity(n);
    }

    const int triples = std::min(products, 500);
    for (int s = 0; s < triples; ++s) {
        const CoverElement g1 = random_cover(), g2 = random_cover(), g3 = random_cover();
        const CoverElement left = cover_mul(cover_mul(g1, g2), g3);
        const CoverElement right = cover_mul(g1, cover_mul(g2, g3));
        rep.assoc_residual = std::max(rep.assoc_residual, std::abs(left.w - right.w));
    }

    const auto centers = center_elements(n, -1.5, 1.5);
    const int commute_samples = std::min(products, 100);
    for (int s = 0; s < commute_samples; ++s) {
        const CoverElement g = random_cover();
        for (const auto& z : centers) {
            const CoverElement zg = cover_mul(z.as_cover(n), g);
            const CoverElement gz = cover_mul(g, z.as_cover(n));
            rep.center_commute_residual = std::max(
                rep.center_commute_residual,
                std::max((zg.M - gz.M).cwiseAbs().maxCoeff(), std::abs(zg.w - gz.w)));
        }
    }

    if (n % 2 == 1) {
        const CoverElement half = CenterElement{-1, 0.5}.as_cover(n);
        const CoverElement sq = cover_mul(half, half);
        rep.parity_relation_err =
            std::max(std::abs(sq.w - 1.0),
                     (sq.M - RealMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff());
    } else {
        const CoverElement torsion = CenterElement{-1, 0.0}.as_cover(n);
        const CoverElement sq = cover_mul(torsion, torsion);
        rep.parity_relation_err =
            std::max(std::abs(sq.w),
                     (sq.M - RealMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff());
    }
    return rep;
}

ExactSequenceReport exact_sequence(int n, std::uint64_t seed, int samples) {
    RandomStream rng(seed, 0x657873);
    ExactSequenceReport rep;
    const RealMatrix I = RealMatrix::Identity(2 * n, 2 * n);
    for (int s = 0; s < samples; ++s) {
        // Fiber-only elements land in ker eta.
        const ExtElement fiber = ext_make(cover_identity(n), rng.uniform(-3.0, 3.0), n);
        rep.kernel_residual =
            std::max(rep.kernel_residual, (eta(fiber) - I).cwiseAbs().maxCoeff());

        // Elements with a nontrivial base leave the kernel.
        const ExtElement moving = ext_make(lift(rng.symplectic(n)), rng.uniform(0.0, 1.0), n);
        if ((eta(moving) - I).cwiseAbs().maxCoeff() < 1e-6)
            rep.kernel_residual = std::max(rep.kernel_residual, 1.0);

        const ExtElement e1 = ext_make(lift(rng.symplectic(n)), rng.uniform(0.0, 1.0), n);
        const ExtElement e2 = ext_make(lift(rng.symplectic(n)), rng.uniform(0.0, 1.0), n);
        rep.hom_residual = std::max(
            rep.hom_residual,
            (eta(ext_mul(e1, e2)) - psp_canonical(eta(e1) * eta(e2))).cwiseAbs().maxCoeff());

        const ModelPoint p{random_siegel(rng, n), rng.uniform(-1.0, 1.0)};
        const SiegelPoint down = bundle_projection(ext_act(e1, p));
        const SiegelPoint expect = mobius(e1.g().M, bundle_projection(p));
        rep.descend_residual =
            std::max(rep.descend_residual, (down.Z - expect.Z).cwiseAbs().maxCoeff());
    }
    return rep;
}

double well_definedness_residual(int n, std::uint64_t seed, int tuples) {
    RandomStream rng(seed, 0x7764);
    double residual = 0.0;
    const auto centers = center_elements(n, -2.0, 2.0);
    for (int s = 0; s < tuples; ++s) {
        const CoverElement g = lift(rng.symplectic(n));
        const double r = rng.uniform(-2.0, 2.0);
        const auto& z = centers[static_cast<std::size_t>(
            rng.uniform(0.0, static_cast<double>(centers.size()) - 0.5))];
        const ModelPoint p{random_siegel(rng, n), rng.uniform(-1.0, 1.0)};

        const ExtElement e = ext_make(g, r, n);
        const ExtElement e_shifted = ext_make(cover_mul(g, z.as_cover(n)), r - iota(z, n), n);

        // Same normal form and same action.
        residual = std::max(residual,
                            (e.g().M - e_shifted.g().M).cwiseAbs().maxCoeff());
        residual = std::max(residual, std::abs(e.g().w - e_shifted.g().w));
        residual = std::max(residual, std::abs(e.r() - e_shifted.r()));

        const ModelPoint q1 = ext_act(e, p);
        const ModelPoint q2 = ext_act(e_shifted, p);
        residual = std::max(residual, (q1.Z.Z - q2.Z.Z).cwiseAbs().maxCoeff());
        residual = std::max(residual, std::abs(q1.t - q2.t));
    }
    return residual;
}

MeasureReport measure_invariance(std::uint64_t seed, int elements, std::uint64_t samples) {
    RandomStream rng(seed, 0x6d6573);
    MeasureReport rep;
    const ProductBox box = default_box_n2();
    for (int e = 0; e < elements; ++e) {
        const RealMatrix M = random_word(rng, 2, 6);
        const double r = rng.uniform(0.0, 1.0);
        const auto res = product_measure_check(2, M, r, box, samples, seed + 1000 + e);
        rep.max_residual = std::max(rep.max_residual, res.residual);
    }

    // O(1/sqrt(N)) decay, averaged over repetitions to tame Monte-Carlo noise.
    const RealMatrix M = random_word(rng, 2, 6);
    const std::uint64_t coarse = std::max<std::uint64_t>(samples / 64, 1000);
    double res_coarse = 0.0, res_fine = 0.0;
    const int reps = 8;
    for (int i = 0; i < reps; ++i) {
        res_coarse += product_measure_check(2, M, 0.0, box, coarse, seed + 7000 + i).residual;
        res_fine += product_measure_check(2, M, 0.0, box, 4 * coarse, seed + 8000 + i).residual;
    }
    rep.decay_ratio = res_coarse / std::max(res_fine, 1e-300);
    return rep;
}

}  // namespace sympfib::checks

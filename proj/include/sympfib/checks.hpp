#pragma once

#include <cstdint>

#include "sympfib/volume.hpp"

namespace sympfib::checks {

// Random word of length <= max_len in the generators gen_D, gen_N, Omega.
RealMatrix random_word(RandomStream& rng, int n, int max_len);

SiegelPoint random_siegel(RandomStream& rng, int n);

struct MobiusReport {
    double composition_residual = 0.0;
    double recover_residual = 0.0;  // stabilizer_test round-trip on unitaries
    int false_positives = 0;        // non-stabilizers reported as stabilizing
    int false_negatives = 0;        // embedded unitaries reported as moving
};
MobiusReport mobius_axioms(int n, std::uint64_t seed, int samples, double tau_act);

struct NormalBundleReport {
    double max_off_residual = 0.0;
    double max_coeff_rel_err = 0.0;  // against det(CZ+D)^{-1}
};
NormalBundleReport normal_bundle_sweep(std::uint64_t seed, int words, int points);

struct PushforwardReport {
    double omega_rel_err = 0.0;  // coefficient 1/det Z
    double diag_rel_err = 0.0;   // coefficient det A
    double shear_rel_err = 0.0;  // coefficient 1
};
PushforwardReport pushforward_generator_cases(std::uint64_t seed, int instances);

struct CoverReport {
    double invariant_residual = 0.0;  // e^{2 pi i w} vs circle_map through products
    double assoc_residual = 0.0;      // |delta w| over random triples
    double center_commute_residual = 0.0;
    double parity_relation_err = 0.0;  // (-id,1/2)^2 = (id,1) resp. torsion order 2
};
CoverReport cover_soundness(int n, std::uint64_t seed, int products);

struct ExactSequenceReport {
    double kernel_residual = 0.0;   // fiber subgroup = ker eta, both directions
    double hom_residual = 0.0;      // eta(e1 e2) vs eta(e1) eta(e2)
    double descend_residual = 0.0;  // bundle projection equivariance
};
ExactSequenceReport exact_sequence(int n, std::uint64_t seed, int samples);

double well_definedness_residual(int n, std::uint64_t seed, int tuples);

struct MeasureReport {
    double max_residual = 0.0;
    double decay_ratio = 0.0;  // mean residual at N/4 over mean residual at N
};
MeasureReport measure_invariance(std::uint64_t seed, int elements, std::uint64_t samples);

}  // namespace sympfib::checks

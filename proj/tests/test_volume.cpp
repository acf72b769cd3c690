#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <vector>

#include "sympfib/checks.hpp"
#include "sympfib/volume.hpp"

using namespace sympfib;
using boost::multiprecision::cpp_int;

namespace {

// Independent oracle: Bernoulli numbers from the defining recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1.
Rational bernoulli_recurrence(int m) {
    std::vector<Rational> B(m + 1);
    B[0] = 1;
    for (int k = 1; k <= m; ++k) {
        // C(k+1, j) accumulated incrementally.
        Rational acc = 0;
        cpp_int binom = 1;  // C(k+1, 0)
        for (int j = 0; j < k; ++j) {
            acc += Rational(binom) * B[j];
            binom = binom * (k + 1 - j) / (j + 1);
        }
        B[k] = -acc / Rational(binom);  // binom = C(k+1, k) = k+1
    }
    return B[m];
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-1/1440") == Rational(-1, 1440));
    CHECK(parse_rational("7") == 7);
    CHECK(format_rational(Rational(-1, 1440)) == "-1/1440");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK(format_rational(parse_rational("6/4")) == "3/2");
    CHECK_THROWS_AS(parse_rational("x/y"), InvariantViolation);
    CHECK_THROWS_AS(parse_rational("1/0"), InvariantViolation);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(8) == Rational(-1, 30));
    for (int m = 2; m <= 40; m += 2) CHECK(bernoulli(m) == bernoulli_recurrence(m));
    CHECK_THROWS_AS(bernoulli(3), InvariantViolation);
    CHECK_THROWS_AS(bernoulli(0), InvariantViolation);
}

TEST_CASE("zeta special values") {
    CHECK(zeta_neg(1) == Rational(-1, 12));
    CHECK(zeta_neg(2) == Rational(1, 120));
    CHECK(zeta_neg(3) == Rational(-1, 252));
    CHECK_THROWS_AS(zeta_neg(0), InvariantViolation);
}

TEST_CASE("euler characteristic of Sp(2n,Z)") {
    CHECK(euler_char_sp(1) == Rational(-1, 12));
    CHECK(euler_char_sp(2) == Rational(-1, 1440));
    CHECK(euler_char_sp(2) == zeta_neg(1) * zeta_neg(2));
    CHECK(euler_char_sp(3) == euler_char_sp(2) * zeta_neg(3));

    const auto t0 = std::chrono::steady_clock::now();
    const Rational chi = euler_char_sp(2);
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    CHECK(chi == Rational(-1, 1440));
    CHECK(us < 1000);
}

TEST_CASE("seifert volume formula") {
    const VolumeResult a = seifert_volume(SeifertDescriptor{"1", "-4", false});
    CHECK(a.volume == 4);
    CHECK(a.signed_value == -4);
    CHECK(a.sign_convention_applied);

    const VolumeResult b = seifert_volume(SeifertDescriptor{"3/2", "-2", false});
    CHECK(b.volume == 3);

    const VolumeResult c = seifert_volume(SeifertDescriptor{"1", "-1/1440", true});
    CHECK(c.volume == Rational(1, 1440));

    // Multiplicative in the covolume, homogeneous in the Euler characteristic.
    const VolumeResult d1 = seifert_volume(SeifertDescriptor{"2/3", "-5/7", false});
    const VolumeResult d2 = seifert_volume(SeifertDescriptor{"4/3", "-5/7", false});
    const VolumeResult d3 = seifert_volume(SeifertDescriptor{"2/3", "-10/7", false});
    CHECK(d2.volume == 2 * d1.volume);
    CHECK(d3.volume == 2 * d1.volume);

    CHECK_THROWS_AS(seifert_volume(SeifertDescriptor{"-1", "2", false}), InvariantViolation);
    CHECK_THROWS_AS(seifert_volume(SeifertDescriptor{"2", "-4", true}), InvariantViolation);
}

TEST_CASE("product measure: identity and shear are invariant within noise") {
    const ProductBox box = default_box_n2();
    const std::uint64_t N = 20000;
    const double noise = 3.0 / std::sqrt(static_cast<double>(N)) + 1e-3;
    const auto id = product_measure_check(2, RealMatrix::Identity(4, 4), 0.37, box, N, 9);
    CHECK(id.residual < noise);

    RandomStream rng(43, 1);
    // Base map is a shear with Jacobian exactly 1; density shifts in X only.
    const auto shear = product_measure_check(2, gen_N(rng.symmetric(2)), 0.0, box, N, 9);
    CHECK(shear.residual < noise);
}

TEST_CASE("product measure: random words within Monte-Carlo noise") {
    RandomStream rng(43, 2);
    const ProductBox box = default_box_n2();
    for (int e = 0; e < 3; ++e) {
        const RealMatrix M = checks::random_word(rng, 2, 6);
        const std::uint64_t N = 20000;
        const auto res = product_measure_check(2, M, rng.uniform(0, 1), box, N, 100 + e);
        CHECK(res.residual < 3.0 / std::sqrt(static_cast<double>(N)) + 1e-3 + 2e-2);
        CHECK(res.measure_e > 0.0);
    }
}

TEST_CASE("product measure input validation") {
    ProductBox bad = default_box_n2();
    bad.hi(0) = bad.lo(0);
    CHECK_THROWS_AS(product_measure_check(2, RealMatrix::Identity(4, 4), 0, bad, 10, 1),
                    InvariantViolation);

    ProductBox off = default_box_n2();
    off.lo(3) = -2.0;  // Y corner leaves the positive-definite cone
    CHECK_THROWS_AS(product_measure_check(2, RealMatrix::Identity(4, 4), 0, off, 10, 1),
                    InvariantViolation);

    RealMatrix notsp = RealMatrix::Identity(4, 4);
    notsp(0, 0) = 2.0;
    CHECK_THROWS_AS(product_measure_check(2, notsp, 0, default_box_n2(), 10, 1),
                    InvariantViolation);
}

TEST_CASE("generic-n branch: invariance on the upper half plane") {
    RandomStream rng(43, 3);
    ProductBox box;
    box.lo.resize(2);
    box.hi.resize(2);
    box.lo << -0.3, 0.8;
    box.hi << 0.3, 1.2;
    box.fiber_lo = 0.0;
    box.fiber_hi = 1.0;
    for (int e = 0; e < 2; ++e) {
        const RealMatrix M = rng.symplectic(1);
        const auto res = product_measure_check(1, M, 0.5, box, 4000, 55 + e);
        CHECK(res.residual < 3.0 / std::sqrt(4000.0) + 1e-3 + 2e-2);
    }
}

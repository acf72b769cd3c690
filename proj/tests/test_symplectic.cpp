#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "sympfib/symplectic.hpp"

using namespace sympfib;

namespace {

RealMatrix mat2(double a, double b, double c, double d) {
    RealMatrix M(2, 2);
    M << a, b, c, d;
    return M;
}

}  // namespace

TEST_CASE("omega basics") {
    const RealMatrix Om1 = omega(1);
    CHECK(Om1 == mat2(0, 1, -1, 0));
    for (int n : {1, 2, 3}) {
        const RealMatrix Om = omega(n);
        CHECK((Om * Om + RealMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() == 0.0);
        CHECK(is_symplectic(Om));
    }
    CHECK_THROWS_AS(omega(0), DimensionError);
}

TEST_CASE("is_symplectic") {
    CHECK(is_symplectic(RealMatrix::Identity(4, 4)));
    RealMatrix A(2, 2);
    A << 1.5, 0.3, -0.2, 2.0;
    CHECK(is_symplectic(gen_D(A)));
    RealMatrix close = RealMatrix::Identity(4, 4);
    close(0, 1) += 1e-3;
    CHECK_FALSE(is_symplectic(close, 1e-9));
    CHECK_THROWS_AS(is_symplectic(RealMatrix::Identity(3, 3)), DimensionError);
    CHECK_THROWS_AS(is_symplectic(RealMatrix::Zero(2, 4)), DimensionError);
}

TEST_CASE("generators") {
    CHECK(gen_D(RealMatrix::Identity(2, 2)) == RealMatrix::Identity(4, 4));
    CHECK(gen_N(RealMatrix::Zero(2, 2)) == RealMatrix::Identity(4, 4));

    RealMatrix A = RealMatrix::Zero(2, 2);
    A(0, 0) = 2.0;
    A(1, 1) = 1.0;
    RealMatrix expected = RealMatrix::Zero(4, 4);
    expected(0, 0) = 2.0;
    expected(1, 1) = 1.0;
    expected(2, 2) = 0.5;
    expected(3, 3) = 1.0;
    CHECK((gen_D(A) - expected).cwiseAbs().maxCoeff() < 1e-15);

    CHECK_THROWS_AS(gen_D(RealMatrix::Zero(2, 2)), InvariantViolation);
    RealMatrix asym(2, 2);
    asym << 0, 1, 0, 0;
    CHECK_THROWS_AS(gen_N(asym), InvariantViolation);
}

TEST_CASE("embed_unitary") {
    const int n = 2;
    CHECK(embed_unitary(ComplexMatrix::Identity(n, n)) == RealMatrix::Identity(2 * n, 2 * n));

    const ComplexMatrix iI = Complex(0, 1) * ComplexMatrix::Identity(n, n);
    RealMatrix want = RealMatrix::Zero(2 * n, 2 * n);
    want.topRightCorner(n, n) = -RealMatrix::Identity(n, n);
    want.bottomLeftCorner(n, n) = RealMatrix::Identity(n, n);
    CHECK((embed_unitary(iI) - want).cwiseAbs().maxCoeff() == 0.0);

    // SU(2) element written out entry by entry.
    const double a1 = 0.5, a2 = 0.5, b1 = 0.5, b2 = 0.5;
    ComplexMatrix U(2, 2);
    U << Complex(a1, a2), Complex(-b1, b2), Complex(b1, b2), Complex(a1, -a2);
    RealMatrix E(4, 4);
    E << a1, -b1, -a2, -b2,
         b1,  a1, -b2,  a2,
         a2,  b2,  a1, -b1,
         b2, -a2,  b1,  a1;
    CHECK((embed_unitary(U) - E).cwiseAbs().maxCoeff() < 1e-15);

    CHECK_THROWS_AS(embed_unitary(2.0 * ComplexMatrix::Identity(2, 2)), InvariantViolation);
}

TEST_CASE("embed_unitary is a homomorphism into Sp cap O") {
    RandomStream rng(7, 1);
    for (int s = 0; s < 50; ++s) {
        const ComplexMatrix U = rng.unitary(3), V = rng.unitary(3);
        const RealMatrix lhs = embed_unitary(ComplexMatrix(U * V), 1e-6);
        const RealMatrix rhs = embed_unitary(U, 1e-6) * embed_unitary(V, 1e-6);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        const RealMatrix M = embed_unitary(U, 1e-6);
        CHECK(is_symplectic(M, 1e-12));
        CHECK((M * M.transpose() - RealMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("unitary_part") {
    CHECK((unitary_part(RealMatrix::Identity(4, 4)) - ComplexMatrix::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() < 1e-13);

    RandomStream rng(11, 2);
    for (int s = 0; s < 30; ++s) {
        const ComplexMatrix U = rng.unitary(2);
        const ComplexMatrix got = unitary_part(embed_unitary(U, 1e-6));
        CHECK((got - U).cwiseAbs().maxCoeff() < 1e-11);
    }

    RealMatrix A = RealMatrix::Zero(2, 2);
    A(0, 0) = 2.0;
    A(1, 1) = 1.0;
    CHECK((unitary_part(gen_D(A)) - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("positive_part reconstructs M") {
    RandomStream rng(13, 3);
    for (int s = 0; s < 30; ++s) {
        const RealMatrix M = rng.symplectic(2);
        const RealMatrix P = positive_part(M);
        CHECK((P - P.transpose()).cwiseAbs().maxCoeff() < 1e-11);
        Eigen::SelfAdjointEigenSolver<RealMatrix> es(P);
        CHECK(es.eigenvalues().minCoeff() > 0.0);
        const RealMatrix K = embed_unitary(unitary_part(M), 1e-6);
        CHECK((P * K - M).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("circle_map") {
    CHECK(std::abs(circle_map(RealMatrix::Identity(4, 4)) - Complex(1, 0)) < 1e-13);

    for (double theta : {0.3, 1.2, -2.5, 3.0}) {
        ComplexMatrix U = ComplexMatrix::Identity(3, 3);
        U(0, 0) = std::polar(1.0, theta);
        const Complex got = circle_map(embed_unitary(U));
        CHECK(std::abs(got - std::polar(1.0, theta)) < 1e-11);
    }

    // A shear's polar unitary factor is a genuine rotation, so circle_map is
    // on the unit circle but not 1 pointwise; it tends to 1 quadratically
    // with the winding vanishing as the shear shrinks.
    RandomStream rng(17, 4);
    const RealMatrix B = rng.symmetric(2);
    const Complex shear = circle_map(gen_N(B));
    CHECK(std::abs(std::abs(shear) - 1.0) < 1e-12);
    const double phase_full = std::abs(std::arg(circle_map(gen_N(B))));
    const double phase_half = std::abs(std::arg(circle_map(gen_N(RealMatrix(0.5 * B)))));
    CHECK(phase_half < 0.6 * phase_full);

    // Multiplicative on the embedded U(n).
    for (int s = 0; s < 20; ++s) {
        const ComplexMatrix U = rng.unitary(2), V = rng.unitary(2);
        const Complex lhs =
            circle_map(RealMatrix(embed_unitary(U, 1e-6) * embed_unitary(V, 1e-6)));
        CHECK(std::abs(lhs - U.determinant() * V.determinant()) < 1e-10);
    }
}

TEST_CASE("random symplectic sampling and inverse") {
    RandomStream rng(19, 5);
    for (int n : {1, 2, 3}) {
        for (int s = 0; s < 20; ++s) {
            const RealMatrix M1 = rng.symplectic(n), M2 = rng.symplectic(n);
            CHECK(is_symplectic(M1, 1e-10));
            CHECK(is_symplectic(RealMatrix(M1 * M2), 1e-9));
            const RealMatrix Minv = symplectic_inverse(M1);
            CHECK(is_symplectic(Minv, 1e-10));
            CHECK((M1 * Minv - RealMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() <
                  1e-10);
            CHECK(M1.determinant() == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("lie algebra residual and sampling oracle") {
    RandomStream rng(23, 6);
    const int n = 2;
    const RealMatrix S = rng.symmetric(2 * n, 0.25);
    const RealMatrix X = -omega(n) * S;
    CHECK(lie_algebra_residual(X) < 1e-15);
    CHECK(is_symplectic(RealMatrix(X.exp()), 1e-11));
    RealMatrix notsp = RealMatrix::Zero(4, 4);
    notsp(0, 0) = 1.0;
    CHECK(lie_algebra_residual(notsp) > 0.5);
}

TEST_CASE("blocks convention") {
    RealMatrix M(4, 4);
    int v = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) M(i, j) = v++;
    const Blocks b = blocks(M);
    CHECK(b.A(0, 0) == 0);
    CHECK(b.B(0, 0) == 2);
    CHECK(b.C(0, 0) == 8);
    CHECK(b.D(0, 0) == 10);
}

TEST_CASE("random streams are substream-independent") {
    RandomStream a(42, 1), b(42, 2), a2(42, 1);
    const double x = a.uniform(0, 1), y = b.uniform(0, 1);
    CHECK(x != y);
    CHECK(a2.uniform(0, 1) == x);
}

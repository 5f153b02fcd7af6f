#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

using namespace stellar;
using std::numbers::pi;

namespace {

const double r3 = std::sqrt(3.0);

PureState phi_ent() { return PureState(2, {r3, 1.0, 1.0, r3}); }
PureState phi_sep() { return PureState(2, {1.0, 1.0, 1.0, 1.0}); }

Constellation equatorial_triple() {
    return Constellation({BlochPoint(0.5 * pi, pi), BlochPoint(0.5 * pi, 0.5 * pi), BlochPoint(0.5 * pi, 1.5 * pi)}, 3);
}

}  // namespace

TEST_CASE("sqrt_binomial") {
    CHECK(sqrt_binomial(3, 1) == doctest::Approx(r3));
    CHECK(sqrt_binomial(10, 5) == doctest::Approx(std::sqrt(252.0)));
    CHECK(sqrt_binomial(60, 30) == doctest::Approx(std::sqrt(1.1826458156486142e17)));
    CHECK(sqrt_binomial(4, 5) == 0.0);
}

TEST_CASE("Majorana polynomial of phi_ent is sqrt3 (1 + x)(1 + x^2)") {
    const ComplexPolynomial p = majorana_polynomial(spin_from_qubits(phi_ent()));
    REQUIRE(p.nominal_degree() == 3);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(p[k] - r3) <= 1e-15);
    const ComplexPolynomial q = qubit_majorana_polynomial(phi_ent());
    CHECK(q.coefficients() == p.coefficients());
}

TEST_CASE("qubit Majorana polynomial examples") {
    const ComplexPolynomial sep = qubit_majorana_polynomial(phi_sep());
    CHECK(std::abs(sep[0] - 1.0) <= 1e-15);
    CHECK(std::abs(sep[1] - r3) <= 1e-15);
    CHECK(std::abs(sep[2] - r3) <= 1e-15);
    CHECK(std::abs(sep[3] - 1.0) <= 1e-15);

    const ComplexPolynomial ground = qubit_majorana_polynomial(PureState::basis(3, 0));
    CHECK(ground[0] == Complex(1.0));
    for (std::size_t k = 1; k < 8; ++k) CHECK(ground[k] == Complex(0.0));
}

TEST_CASE("top state gives the monomial x^{2S}") {
    const ComplexPolynomial p = majorana_polynomial(SpinState::basis(4, 4));
    CHECK(p[4] == Complex(1.0));
    for (int k = 0; k < 4; ++k) CHECK(p[k] == Complex(0.0));
}

TEST_CASE("state_from_spinors examples") {
    const std::vector<Spinor> s{{1.0, 1.0}, {1.0, Complex(0, -1)}, {1.0, Complex(0, 1)}};
    const SpinState state = state_from_spinors(s, r3);
    const ComplexVector expected{r3, 1.0, 1.0, r3};
    for (int m = 0; m < 4; ++m) CHECK(std::abs(state[m] - expected[m]) <= 1e-15);

    const std::vector<Spinor> ups(5, Spinor(1.0, 0.0));
    const SpinState top = state_from_spinors(ups);
    CHECK(top[5] == Complex(1.0));
    for (int m = 0; m < 5; ++m) CHECK(top[m] == Complex(0.0));

    CHECK_THROWS_AS(state_from_spinors(s, 0.0), InvalidArgument);
    CHECK_THROWS_AS(state_from_spinors(std::vector<Spinor>{}), InvalidArgument);
    CHECK_THROWS_AS(Spinor(0.0, 0.0), InvalidArgument);
}

TEST_CASE("convolution coefficients equal the permutation sum") {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = rng.spinors(1 + trial % 6);
        const ComplexVector conv = spinor_product_coefficients(s);
        const ComplexVector brute = oracle::permutation_sum_coefficients(s);
        for (std::size_t k = 0; k < conv.size(); ++k) CHECK(std::abs(conv[k] - brute[k]) <= 1e-12 * (1 + std::abs(brute[k])));
    }
}

TEST_CASE("factorization identity: polynomial of the symmetrized state is A prod (alpha x + beta)") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = rng.spinors(1 + trial % 9);
        const Complex scale = rng.complex();
        const ComplexPolynomial p = majorana_polynomial(state_from_spinors(s, scale));
        ComplexPolynomial product(ComplexVector{scale});
        for (const auto& sp : s) product = product * ComplexPolynomial({sp.beta, sp.alpha});
        const double m = product.max_abs_coefficient();
        for (std::size_t k = 0; k <= p.nominal_degree(); ++k) CHECK(std::abs(p[k] - product[k]) <= 1e-12 * m);
    }
}

TEST_CASE("state_from_spinors is invariant under permutation of the spinors") {
    oracle::Rng rng(43);
    auto s = rng.spinors(5);
    const SpinState a = state_from_spinors(s);
    std::reverse(s.begin(), s.end());
    std::swap(s[0], s[2]);
    const SpinState b = state_from_spinors(s);
    for (std::size_t m = 0; m < a.dim(); ++m) CHECK(std::abs(a[m] - b[m]) <= 1e-13 * (1 + std::abs(a[m])));
}

TEST_CASE("points_from_roots") {
    const std::vector<Complex> roots{-1.0, Complex(0, 1), Complex(0, -1)};
    const Constellation c = points_from_roots(roots, 0, 3);
    CHECK(constellation_mismatch(c, equatorial_triple()) <= 1e-15);

    const Constellation south = points_from_roots({}, 3, 3);
    for (const auto& p : south.points()) CHECK(p == BlochPoint::south());

    const std::vector<Complex> zero{0.0};
    CHECK(points_from_roots(zero, 0, 1).points()[0] == BlochPoint::north());
    CHECK_THROWS_AS(points_from_roots(roots, 1, 3), InvalidArgument);
}

TEST_CASE("Majorana constellations of basis and reference states") {
    CHECK(constellation_mismatch(majorana_constellation(phi_ent()), equatorial_triple()) <= 1e-12);

    const Constellation low = majorana_constellation(SpinState::basis(5, 0));
    REQUIRE(low.size() == 5);
    for (const auto& p : low.points()) CHECK(p == BlochPoint::south());

    // phi_sep: 1 + sqrt3 x + sqrt3 x^2 + x^3 = (1 + x)(1 + (sqrt3 - 1) x + x^2); the
    // quadratic has unit-modulus roots with cos(psi) = (1 - sqrt3)/2.
    const double psi = std::acos(0.5 * (1.0 - r3));
    const Constellation expected({BlochPoint(0.5 * pi, pi), BlochPoint(0.5 * pi, psi), BlochPoint(0.5 * pi, 2 * pi - psi)}, 3);
    CHECK(constellation_mismatch(majorana_constellation(phi_sep()), expected) <= 1e-12);
}

TEST_CASE("degree deficiency is exactly the south-pole count") {
    oracle::Rng rng(44);
    for (int l = 0; l <= 4; ++l) {
        ComplexVector amps = rng.vector(7);
        for (int k = 0; k < l; ++k) amps[6 - k] = 0.0;
        const SpinState s(6, amps);
        CHECK(leading_deficiency(majorana_polynomial(s)) == static_cast<std::size_t>(l));
        const Constellation c = majorana_constellation(s);
        const auto south = std::count(c.points().begin(), c.points().end(), BlochPoint::south());
        CHECK(south == l);
    }
}

TEST_CASE("constellations are ray invariant") {
    oracle::Rng rng(45);
    for (int two_s = 1; two_s <= 8; ++two_s) {
        const SpinState s = rng.spin_state(two_s);
        ComplexVector scaled = s.amplitudes();
        for (auto& z : scaled) z *= 7.3 * std::polar(1.0, pi / 5);
        CHECK(constellation_mismatch(majorana_constellation(s), majorana_constellation(SpinState(two_s, scaled))) <= 1e-9);
    }
}

TEST_CASE("distinct rays give distinct constellations") {
    oracle::Rng rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        const SpinState a = rng.spin_state(4);
        const SpinState b = rng.spin_state(4);
        CHECK(constellation_mismatch(majorana_constellation(a), majorana_constellation(b)) > 1e-6);
    }
}

TEST_CASE("state_from_constellation") {
    const SpinState s = state_from_constellation(equatorial_triple());
    CHECK(1.0 - fidelity(s, spin_from_qubits(phi_ent())) <= 1e-14);

    const Constellation north({BlochPoint::north(), BlochPoint::north()}, 2);
    const SpinState top = state_from_constellation(north);
    CHECK(1.0 - fidelity(top, SpinState::basis(2, 2)) <= 1e-15);

    const Spinor sp = spinor_from_point(BlochPoint(1.1, 0.4));
    CHECK(sp.alpha.imag() == 0.0);
    CHECK(sp.alpha.real() >= 0.0);
    CHECK(std::abs(-sp.beta / sp.alpha - std::tan(0.55) * std::polar(1.0, 0.4)) <= 1e-15);
}

TEST_CASE("constellation round trips") {
    oracle::Rng rng(47);
    for (int n = 1; n <= 8; ++n) {
        std::vector<BlochPoint> pts;
        for (int k = 0; k < n; ++k) pts.push_back(rng.point());
        const Constellation c(pts, pts.size());
        CHECK(constellation_mismatch(majorana_constellation(state_from_constellation(c)), c) <= 1e-8);
    }
    for (int two_s = 1; two_s <= 10; ++two_s) {
        const SpinState s = rng.spin_state(two_s);
        CHECK(fidelity(state_from_constellation(majorana_constellation(s)), s) >= 1.0 - 1e-9);
    }
}

#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

using namespace stellar;

namespace {

// Max distance after greedy-free optimal matching of complex root lists.
double root_mismatch(ComplexVector a, ComplexVector b) {
    REQUIRE(a.size() == b.size());
    std::vector<std::size_t> perm(a.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    if (a.size() <= 8) {
        double best = INFINITY;
        do {
            double worst = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
            best = std::min(best, worst);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
    // Larger sets: pair each root with the nearest unused one.
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        std::size_t pick = 0;
        double d = INFINITY;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && std::abs(x - b[j]) < d) {
                d = std::abs(x - b[j]);
                pick = j;
            }
        }
        used[pick] = true;
        worst = std::max(worst, d);
    }
    return worst;
}

void check_residual_bound(const ComplexPolynomial& p, const RootResult& r, double tol) {
    const std::size_t d = p.nominal_degree() - r.leading_deficiency;
    for (const auto& x : r.roots) {
        const double bound = tol * p.max_abs_coefficient() * std::pow(std::max(1.0, std::abs(x)), double(d));
        CHECK(std::abs(evaluate(p, x)) <= bound);
    }
}

}  // namespace

TEST_CASE("evaluate") {
    const double r3 = std::sqrt(3.0);
    const ComplexPolynomial p({r3, r3, r3, r3});
    CHECK(std::abs(evaluate(p, -1.0)) <= 1e-15);
    CHECK(evaluate(p, 0.0) == Complex(r3));

    oracle::Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexVector c = rng.vector(1 + trial % 12);
        const Complex x = rng.complex();
        const Complex naive = oracle::naive_evaluate(c, x);
        double magnitude = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) magnitude += std::abs(c[k]) * std::pow(std::abs(x), double(k));
        CHECK(std::abs(evaluate(ComplexPolynomial(c), x) - naive) <= 1e-13 * magnitude);
    }
}

TEST_CASE("roots of sqrt3 (1 + x)(1 + x^2)") {
    const double r3 = std::sqrt(3.0);
    const ComplexPolynomial p({r3, r3, r3, r3});
    const RootResult r = find_roots(p);
    CHECK(r.leading_deficiency == 0);
    CHECK(root_mismatch(r.roots, {-1.0, Complex(0, 1), Complex(0, -1)}) <= 1e-12);
    check_residual_bound(p, r, kDefaultRootTolerance);
}

TEST_CASE("x^2 has a double root at zero") {
    const RootResult r = find_roots(ComplexPolynomial({0.0, 0.0, 1.0}));
    CHECK(r.roots == ComplexVector{0.0, 0.0});
    CHECK(r.trailing_zero_roots == 2);
    CHECK(r.leading_deficiency == 0);
}

TEST_CASE("leading deficiency and constant polynomials") {
    const RootResult constant = find_roots(ComplexPolynomial({2.0}));
    CHECK(constant.roots.empty());

    const RootResult r = find_roots(ComplexPolynomial({1.0, 0.0, 0.0, 0.0}));
    CHECK(r.roots.empty());
    CHECK(r.leading_deficiency == 3);

    const RootResult partial = find_roots(ComplexPolynomial({2.0, 1.0, 1e-15, 0.0}));
    CHECK(partial.leading_deficiency == 2);
    REQUIRE(partial.roots.size() == 1);
    CHECK(std::abs(partial.roots[0] + 2.0) <= 1e-14);
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(find_roots(ComplexPolynomial({0.0, 0.0})), InvalidArgument);
    CHECK_THROWS_AS(find_roots(ComplexPolynomial({1.0, 1.0}), 0.0), InvalidArgument);
    CHECK_THROWS_AS(ComplexPolynomial(ComplexVector{}), InvalidArgument);
}

TEST_CASE("construct-then-solve recovers eight random roots") {
    oracle::Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexVector roots = rng.vector(8);
        const ComplexPolynomial p = polynomial_from_roots(roots, rng.complex());
        const RootResult r = find_roots(p);
        CHECK(root_mismatch(r.roots, roots) <= 1e-8);
        check_residual_bound(p, r, kDefaultRootTolerance);
    }
}

TEST_CASE("multiple and clustered roots are returned as repeated entries") {
    const ComplexVector roots{Complex(0.5, 0.5), Complex(0.5, 0.5), Complex(0.5, 0.5), -2.0, Complex(0, 1)};
    const ComplexPolynomial p = polynomial_from_roots(roots);
    const RootResult r = find_roots(p);
    CHECK(r.roots.size() == 5);
    // A triple root is only determined to about eps^(1/3).
    CHECK(root_mismatch(r.roots, roots) <= 1e-4);
    check_residual_bound(p, r, kDefaultRootTolerance);
}

TEST_CASE("random polynomials up to degree 63 satisfy the residual bound") {
    oracle::Rng rng(23);
    for (int degree : {1, 2, 3, 7, 15, 31, 63}) {
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexPolynomial p(rng.vector(degree + 1));
            const RootResult r = find_roots(p);
            CHECK(r.roots.size() + r.leading_deficiency == p.nominal_degree());
            check_residual_bound(p, r, kDefaultRootTolerance);
        }
    }
}

TEST_CASE("reconstruction from roots matches the polynomial") {
    oracle::Rng rng(24);
    for (int degree = 1; degree <= 15; ++degree) {
        const ComplexPolynomial p(rng.vector(degree + 1));
        const RootResult r = find_roots(p);
        const ComplexPolynomial back = polynomial_from_roots(r.roots, p.coefficients().back());
        for (int k = 0; k <= degree; ++k) {
            CHECK(std::abs(back[k] - p[k]) <= 1e-8 * p.max_abs_coefficient());
        }
    }
}

TEST_CASE("conjugate polynomial has conjugate roots") {
    oracle::Rng rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexVector c = rng.vector(7);
        ComplexVector cc = c;
        for (auto& z : cc) z = std::conj(z);
        ComplexVector roots = find_roots(ComplexPolynomial(c)).roots;
        for (auto& z : roots) z = std::conj(z);
        CHECK(root_mismatch(find_roots(ComplexPolynomial(cc)).roots, roots) <= 1e-8);
    }
}

TEST_CASE("find_roots is deterministic") {
    oracle::Rng rng(26);
    const ComplexPolynomial p(rng.vector(20));
    CHECK(find_roots(p).roots == find_roots(p).roots);
}

TEST_CASE("non-convergence reports the best iterate") {
    const ComplexPolynomial p({1.0, 0.3, Complex(0.2, 0.7), 1.1});
    try {
        find_roots(p, 1e-300);
        FAIL("expected RootFindingError");
    } catch (const RootFindingError& e) {
        CHECK(e.best_iterate().roots.size() == 3);
        CHECK(e.residual() > 1e-300);
        CHECK(std::string(e.what()).find("residual") != std::string::npos);
    }
}

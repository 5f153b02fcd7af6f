#include "stellar/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <fmt/format.h>

namespace stellar {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_negligible(const Complex& c, double scale) {
    return std::abs(c) <= kNegligibleCoefficient * scale;
}

// Horner for p and p' together, plus the running bound sum |c_k||x|^k used to
// decide when p(x) is indistinguishable from rounding noise.
struct HornerValue {
    Complex p;
    Complex dp;
    double magnitude;
};

HornerValue horner(const ComplexVector& c, Complex x) {
    HornerValue v{c.back(), Complex{}, std::abs(c.back())};
    const double ax = std::abs(x);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        v.dp = v.dp * x + v.p;
        v.p = v.p * x + c[k];
        v.magnitude = v.magnitude * ax + std::abs(c[k]);
    }
    return v;
}

// Positive root of |c_n| r^n = sum_{k<n} |c_k| r^k: every root lies within it.
double cauchy_radius(const ComplexVector& c) {
    const std::size_t n = c.size() - 1;
    const double lead = std::abs(c[n]);
    double r = 0.0;
    for (std::size_t k = 0; k < n; ++k) r = std::max(r, std::abs(c[k]) / lead);
    r += 1.0;  // classical upper bound; Newton descends monotonically from here
    for (int it = 0; it < 100; ++it) {
        double f = lead;
        double df = 0.0;
        for (std::size_t k = n; k-- > 0;) {
            df = df * r + f;
            f = f * r - std::abs(c[k]);
        }
        if (df <= 0.0) break;
        const double step = f / df;
        r -= step;
        if (std::abs(step) <= 1e-12 * r) break;
    }
    return r;
}

double root_residual(const ComplexVector& cleaned, std::size_t degree, double scale, Complex x) {
    const double denom = scale * std::pow(std::max(1.0, std::abs(x)), static_cast<double>(degree));
    return std::abs(horner(cleaned, x).p) / denom;
}

// Simultaneous Aberth-Ehrlich iteration on c (c.front() != 0, c.back() != 0).
int aberth(const ComplexVector& c, double tol, ComplexVector& z) {
    const std::size_t n = c.size() - 1;
    const double radius = cauchy_radius(c);
    z.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        const double jitter = 1.0 - 0.01 * static_cast<double>((3 * k) % 7) / 7.0;
        z[k] = std::polar(radius * jitter, angle);
    }
    std::vector<bool> done(n, false);
    int iterations = 0;
    for (; iterations < kMaxRootIterations; ++iterations) {
        bool all_done = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            const auto v = horner(c, z[k]);
            if (std::abs(v.p) <= 4.0 * kEps * v.magnitude) {
                done[k] = true;
                continue;
            }
            const Complex newton = v.p / v.dp;
            Complex repulsion{};
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            }
            const Complex w = newton / (1.0 - newton * repulsion);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                // Coincident iterates: nudge apart deterministically.
                z[k] += std::polar(1e-8 * std::max(1.0, std::abs(z[k])), 1.0 + static_cast<double>(k));
                all_done = false;
                continue;
            }
            z[k] -= w;
            if (std::abs(w) <= tol * std::max(1.0, std::abs(z[k]))) {
                done[k] = true;
            } else {
                all_done = false;
            }
        }
        if (all_done) break;
    }
    return iterations;
}

// Newton steps on each root; a step is kept only if it lowers |p| and stays
// well inside the gap to the nearest other root.
void polish(const ComplexVector& c, ComplexVector& z) {
    for (std::size_t k = 0; k < z.size(); ++k) {
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (j != k) gap = std::min(gap, std::abs(z[k] - z[j]));
        }
        for (int step = 0; step < 3; ++step) {
            const auto v = horner(c, z[k]);
            if (v.dp == Complex{}) break;
            const Complex candidate = z[k] - v.p / v.dp;
            if (std::abs(candidate - z[k]) > 0.25 * gap) break;
            if (std::abs(horner(c, candidate).p) >= std::abs(v.p)) break;
            z[k] = candidate;
        }
    }
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(ComplexVector coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw InvalidArgument("a polynomial needs at least one coefficient");
}

double ComplexPolynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& c : coefficients_) m = std::max(m, std::abs(c));
    return m;
}

ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs) {
    ComplexVector out(lhs.coefficients_.size() + rhs.coefficients_.size() - 1);
    for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
            out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
        }
    }
    return ComplexPolynomial(std::move(out));
}

Complex evaluate(const ComplexPolynomial& p, Complex x) {
    return horner(p.coefficients(), x).p;
}

std::size_t leading_deficiency(const ComplexPolynomial& p) {
    const double scale = p.max_abs_coefficient();
    if (scale == 0.0) throw InvalidArgument("the zero polynomial has no roots");
    const auto& c = p.coefficients();
    std::size_t l = 0;
    while (l < c.size() && is_negligible(c[c.size() - 1 - l], scale)) ++l;
    return l;
}

RootResult find_roots(const ComplexPolynomial& p, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("root tolerance must be positive");
    const double scale = p.max_abs_coefficient();
    if (scale == 0.0) throw InvalidArgument("the zero polynomial has no roots");

    RootResult result;
    result.leading_deficiency = leading_deficiency(p);
    const auto& c = p.coefficients();
    const std::size_t top = c.size() - 1 - result.leading_deficiency;  // effective degree
    std::size_t zeros = 0;
    while (zeros < top && is_negligible(c[zeros], scale)) ++zeros;
    result.trailing_zero_roots = zeros;

    ComplexVector cleaned(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(top) + 1);
    std::fill(cleaned.begin(), cleaned.begin() + static_cast<std::ptrdiff_t>(zeros), Complex{});
    const ComplexVector core(cleaned.begin() + static_cast<std::ptrdiff_t>(zeros), cleaned.end());

    ComplexVector z;
    if (core.size() == 2) {
        z = {-core[0] / core[1]};
    } else if (core.size() > 2) {
        result.iterations = aberth(core, tol, z);
        polish(core, z);
    }
    result.roots = std::move(z);
    result.roots.insert(result.roots.end(), zeros, Complex{});

    for (const auto& x : result.roots) {
        result.residual = std::max(result.residual, root_residual(cleaned, top, scale, x));
    }
    if (!(result.residual <= tol)) {
        throw RootFindingError(fmt::format("root finder did not converge after {} iterations (residual {:.3e})",
                                           result.iterations, result.residual),
                               std::move(result));
    }
    return result;
}

ComplexPolynomial polynomial_from_roots(std::span<const Complex> roots, Complex leading) {
    ComplexVector c{leading};
    for (const auto& r : roots) {
        ComplexVector next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return ComplexPolynomial(std::move(c));
}

}  // namespace stellar

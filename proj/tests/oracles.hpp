#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code path it is used to check.

#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "stellar/altsep.hpp"
#include "stellar/constellation.hpp"
#include "stellar/majorana.hpp"
#include "stellar/rotations.hpp"
#include "stellar/state_core.hpp"

namespace oracle {

using stellar::Complex;
using stellar::ComplexVector;

class Rng {
public:
    explicit Rng(unsigned seed) : engine_(seed) {}
    Complex complex();
    double uniform(double lo, double hi);
    ComplexVector vector(std::size_t n);
    stellar::PureState state(std::size_t n_qubits);
    stellar::SpinState spin_state(int two_s);
    std::vector<stellar::Spinor> spinors(std::size_t count);
    std::pair<Complex, Complex> qubit();
    std::vector<std::pair<Complex, Complex>> qubits(std::size_t n);
    stellar::EulerAngles angles();
    stellar::BlochPoint point();
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// The symmetrized-product sum taken literally: for each M, the sum over all (2S)! index permutations
/// divided by (S+M)!(S-M)!.
ComplexVector permutation_sum_coefficients(const std::vector<stellar::Spinor>& spinors);

/// sum_k c_k x^k with explicit powers.
Complex naive_evaluate(const ComplexVector& c, Complex x);

/// amplitude(i) = prod_j (bit j of i ? b_j : a_j)
ComplexVector brute_tensor(const std::vector<std::pair<Complex, Complex>>& factors);

/// Coefficient of x^i in prod_j (a_j + b_j x^{2^j}), expanded term by term.
ComplexVector expanded_separable_polynomial(const std::vector<std::pair<Complex, Complex>>& factors);

/// Spin-S generators in the ascending-M basis, S_z diagonal.
Eigen::MatrixXcd spin_z(int two_s);
/// Standard (Condon-Shortley) S_y.
Eigen::MatrixXcd spin_y(int two_s);

/// exp(-i a S_z) exp(+i b S_y) exp(-i g S_z), by dense matrix exponentials.
/// The sign on S_y is the library's basis convention (Condon-Shortley
/// conjugated by exp(-i pi S_z)).
Eigen::MatrixXcd rotation_by_exponentials(int two_s, const stellar::EulerAngles& g);

/// Singular values of a 2x2 complex matrix in closed form, descending.
std::pair<double, double> singular_values_2x2(Complex m00, Complex m01, Complex m10, Complex m11);

/// Max over the optimal matching, by exhaustive search (n <= 8).
double brute_force_mismatch(const std::vector<stellar::BlochPoint>& a, const std::vector<stellar::BlochPoint>& b);

stellar::PureState bell();
stellar::PureState ghz(std::size_t n);
stellar::PureState w_state(std::size_t n);

}  // namespace oracle

#pragma once

#include "cscalc/wseries.hpp"

#include <array>
#include <tuple>
#include <vector>

namespace cscalc {

enum class ThetaKind { Theta, Theta1, Theta2, Theta3 };

/// Two-variable product expansion through w-degree D and q-order N
/// (exponents in 1/24 units). theta and theta1 carry a 2*q^{1/8} prefactor
/// and are odd resp. even in w; theta2, theta3 start at 1.
WSeries theta_expand(ThetaKind kind, int D, int N);

/// Body of the product with the w-independent 2*q^{1/8} prefactor stripped
/// (theta, theta1); identical to theta_expand for theta2, theta3. Ratios of
/// bodies are ratios of the full functions.
WSeries theta_body(ThetaKind kind, int D, int N);
QSeries theta_prefactor(ThetaKind kind, int N);

/// theta(0,tau)-type null values as one-variable products. Theta itself
/// vanishes at v=0; requesting it is an error.
QSeries theta_null(ThetaKind kind, int N);
/// d theta/dv at v=0: 2 pi q^{1/8} prod (1-q^j)^3, carries pi^1.
QSeries theta_prime_null(int N);

enum class BracketKind { ThetaReg, Theta1, Theta2, Theta3 };

/// Log-derivative series read in the variable z, where ' = d/dv and the
/// function argument is v = z. Slot e holds the coefficient of z^e and
/// carries pi^{e+1} in its Scalar grading (one pi from d/dv, e from w = pi z).
/// ThetaReg is the regularized 1/z - theta'(z)/theta(z), computed as the
/// series quotient [theta(z) - z theta'(z)]/z^2 by theta(z)/z.
WSeries theta_logderiv(BracketKind kind, int D, int N);

/// log f_kind as a series in w (pi-free, even slots only, zero constant):
/// f_PsiW(z) = z theta'(0)/theta(z), f_PhiW, f_PhiW' append the theta2/theta3
/// ratio, f_PhiL doubles the argument and uses theta1. Used through
/// det^{1/2}(f(.)) = exp(tr log f(.)/2).
enum class GenusKind { PhiL, PhiW, PhiWPrime, PsiW };
WSeries genus_log_w(GenusKind kind, int D, int N);

struct ModularFormTable {
    std::array<QSeries, 3> delta; // delta_1..3, weight 2
    std::array<QSeries, 3> eps;   // eps_1..3, weight 4
    QSeries e4;                   // Eisenstein E_4
    QSeries eta;                  // Dedekind eta, leading q^{1/24}
};

/// delta_i = +-(theta_a^4 +- theta_b^4)/8, eps_i = +-theta_a^4 theta_b^4/16
/// from the null products; E_4 from divisor sums; eta from its product.
ModularFormTable modular_table(int N);

/// theta'(0) - pi * theta1(0) theta2(0) theta3(0); identically zero, with the
/// two sides coming from the two-variable expansion and the null products.
QSeries jacobi_residual(int N);

QSeries eta_series(int N);

/// Coefficients of f in the basis {delta2^a eps2^b : 2a + 4b = weight}, found
/// by exact linear solve on the q-expansion and verified against every
/// available coefficient of f. Throws NotInRing when f is not in the span.
struct ModDecomposition {
    int weight = 0;
    std::vector<std::tuple<int, int, Rat>> terms; // (a, b, coefficient)
    QSeries reconstruct(const ModularFormTable& table, int trunc) const;
};
ModDecomposition decompose_gamma0_2(const QSeries& f, int weight, const ModularFormTable& table);

} // namespace cscalc

#pragma once

#include <vector>

namespace bne {

// Polynomial in the monomial basis, coeffs[i] is the coefficient of x^i.
class Polynomial {
public:
    Polynomial() : coeffs_(1, 0.0) {}
    explicit Polynomial(std::vector<double> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int i) const;
    const std::vector<double>& coeffs() const { return coeffs_; }

    double operator()(double x) const;  // Horner evaluation

private:
    std::vector<double> coeffs_;
};

// T_d(x) by the three-term recurrence; numerically the stable route and the
// cross-check for the coefficient expansions below.
double chebyshev_eval(int d, double x);

// Monomial coefficients of T_d. Exact in double for the degrees used here
// (d <= 30).
Polynomial chebyshev_coeffs(int d);

// p(x) = T_d((1-x)/(1-delta)) / T_d(1/(1-delta)). Satisfies p(0) = 1 and
// |p| <= 1/T_d(1/(1-delta)) on [delta, 1]; fed eigenvalues of D~.
Polynomial qbne_poly(int d, double delta);

// p(x) = T_d(x/(1-delta)) / T_d(1/(1-delta)). Satisfies p(1) = 1, is small on
// [0, 1-delta], and only powers with the parity of d have nonzero
// coefficients; fed eigenvalues of H = I - D~.
Polynomial cbne_poly(int d, double delta);

double two_norm_sq(const Polynomial& p);

enum class DegreeRule { chebyshev, power };

// ceil(ln(4/eps)/sqrt(delta)) for the Chebyshev rule,
// ceil(ln(2/eps)/delta) for the plain power rule
int degree_for(double eps, double delta, DegreeRule rule);

}  // namespace bne

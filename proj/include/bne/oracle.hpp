#pragma once

#include <cstddef>
#include <vector>

#include "bne/chebyshev.hpp"
#include "bne/complex.hpp"

namespace bne {

// Exact (dense linear algebra) reference data for a clique complex at level k.
// Betti numbers, the spectral gap and operator norms all come from one
// symmetric eigendecomposition of D~ = D_k/n.
struct ComplexProfile {
    int n = 0;
    int k = 0;
    std::size_t size = 0;              // |S_k|
    std::size_t betti = 0;             // dim ker D_k
    double betti_normalised = 0.0;     // betti / |S_k|
    double delta = 1.0;                // smallest eigenvalue >= kernel_tol
    bool delta_degenerate = false;     // no eigenvalue above tolerance
    double one_norm_H = 0.0;           // max column 1-norm of I - D~
    std::vector<double> spectrum;      // eigenvalues of D~, ascending
};

// Refuses |S_k| above this size; the estimators themselves have no such cap.
inline constexpr std::size_t kOracleMaxSimplices = 5000;

ComplexProfile profile(const Graph& g, int k, double kernel_tol = 1e-8);

// (1/|S_k|) tr(M^d) with M = D~ (laplacian) or M = I - D~ (reflected); d = 0
// returns 1 by convention.
double exact_power_trace(const Graph& g, int k, int d, Variant variant);
double exact_power_trace(const ComplexProfile& p, int d, Variant variant);

// (1/|S_k|) tr(p(M))
double exact_poly_trace(const Graph& g, int k, const Polynomial& p, Variant variant);
double exact_poly_trace(const ComplexProfile& prof, const Polynomial& p, Variant variant);

}  // namespace bne

#include "bne/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "bne/boundary.hpp"

namespace bne {

ComplexProfile profile(const Graph& g, int k, double kernel_tol) {
    const std::size_t m = enumerate_k_simplices(g, k).size();
    if (m == 0) throw std::invalid_argument("complex has no k-simplices");
    if (m > kOracleMaxSimplices) {
        throw std::invalid_argument("exact oracle supports at most " +
                                    std::to_string(kOracleMaxSimplices) + " simplices");
    }
    const Eigen::MatrixXd L = dense_laplacian(g, k);

    ComplexProfile p;
    p.n = g.n();
    p.k = k;
    p.size = m;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L / g.n(),
                                                      Eigen::EigenvaluesOnly);
    p.spectrum.assign(es.eigenvalues().data(), es.eigenvalues().data() + m);

    p.betti = 0;
    p.delta_degenerate = true;
    p.delta = 1.0;
    for (double ev : p.spectrum) {
        if (ev < kernel_tol) {
            ++p.betti;
        } else if (p.delta_degenerate) {
            p.delta = ev;  // spectrum is ascending: first value above tolerance
            p.delta_degenerate = false;
        }
    }
    p.betti_normalised = static_cast<double>(p.betti) / static_cast<double>(m);

    const Eigen::MatrixXd H =
        Eigen::MatrixXd::Identity(L.rows(), L.rows()) - L / g.n();
    p.one_norm_H = H.cwiseAbs().colwise().sum().maxCoeff();
    return p;
}

double exact_power_trace(const ComplexProfile& p, int d, Variant variant) {
    if (d < 0) throw std::invalid_argument("power must be non-negative");
    if (d == 0) return 1.0;
    double sum = 0.0;
    for (double ev : p.spectrum) {
        const double mu = variant == Variant::laplacian ? ev : 1.0 - ev;
        sum += std::pow(mu, d);
    }
    return sum / static_cast<double>(p.size);
}

double exact_power_trace(const Graph& g, int k, int d, Variant variant) {
    return exact_power_trace(profile(g, k), d, variant);
}

double exact_poly_trace(const ComplexProfile& prof, const Polynomial& p,
                        Variant variant) {
    double sum = 0.0;
    for (double ev : prof.spectrum) {
        const double mu = variant == Variant::laplacian ? ev : 1.0 - ev;
        sum += p(mu);
    }
    return sum / static_cast<double>(prof.size);
}

double exact_poly_trace(const Graph& g, int k, const Polynomial& p, Variant variant) {
    return exact_poly_trace(profile(g, k), p, variant);
}

}  // namespace bne

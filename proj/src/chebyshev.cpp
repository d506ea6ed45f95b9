#include "bne/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace bne {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[i];
}

double Polynomial::operator()(double x) const {
    double v = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

double chebyshev_eval(int d, double x) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    if (d == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int i = 2; i <= d; ++i) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Polynomial chebyshev_coeffs(int d) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<double> prev{1.0};
    if (d == 0) return Polynomial(prev);
    std::vector<double> cur{0.0, 1.0};
    for (int i = 2; i <= d; ++i) {
        std::vector<double> next(i + 1, 0.0);
        for (int j = 0; j < i; ++j) next[j + 1] += 2.0 * cur[j];
        for (int j = 0; j < i - 1; ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Polynomial(cur);
}

namespace {

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
}

// coefficients of p(a + b*x) given those of p
std::vector<double> substitute_affine(const std::vector<double>& p, double a, double b) {
    const std::size_t n = p.size();
    std::vector<double> out(n, 0.0);
    std::vector<double> bpow(n, 1.0);
    for (std::size_t i = 1; i < n; ++i) bpow[i] = bpow[i - 1] * b;
    std::vector<double> binom{1.0};  // row j of Pascal's triangle
    for (std::size_t j = 0; j < n; ++j) {
        if (p[j] != 0.0) {
            // (a + b x)^j = sum_i C(j,i) a^(j-i) b^i x^i
            double apow = 1.0;
            for (std::size_t i = j + 1; i-- > 0;) {
                out[i] += p[j] * binom[i] * apow * bpow[i];
                apow *= a;
            }
        }
        binom.push_back(0.0);
        for (std::size_t i = binom.size() - 1; i > 0; --i) binom[i] += binom[i - 1];
    }
    return out;
}

}  // namespace

Polynomial qbne_poly(int d, double delta) {
    check_delta(delta);
    if (d < 1) throw std::invalid_argument("degree must be positive");
    const double scale = 1.0 / (1.0 - delta);
    const auto t = chebyshev_coeffs(d).coeffs();
    auto num = substitute_affine(t, scale, -scale);  // T_d((1-x)/(1-delta))
    const double denom = chebyshev_eval(d, scale);
    for (auto& c : num) c /= denom;
    return Polynomial(std::move(num));
}

Polynomial cbne_poly(int d, double delta) {
    check_delta(delta);
    if (d < 1) throw std::invalid_argument("degree must be positive");
    const double scale = 1.0 / (1.0 - delta);
    const auto t = chebyshev_coeffs(d).coeffs();
    const double denom = chebyshev_eval(d, scale);
    std::vector<double> num(t.size(), 0.0);
    double spow = 1.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        num[i] = t[i] * spow / denom;  // T_d's parity keeps exact zeros exact
        spow *= scale;
    }
    return Polynomial(std::move(num));
}

double two_norm_sq(const Polynomial& p) {
    double s = 0.0;
    for (double c : p.coeffs()) s += c * c;
    return s;
}

int degree_for(double eps, double delta, DegreeRule rule) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
    check_delta(delta);
    double raw = 0.0;
    if (rule == DegreeRule::chebyshev) {
        raw = std::log(4.0 / eps) / std::sqrt(delta);
    } else {
        raw = std::log(2.0 / eps) / delta;
    }
    return static_cast<int>(std::ceil(raw));
}

}  // namespace bne

#include "bne/boundary.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

namespace bne {

SimplexState apply_full_boundary(const Graph& g, const SimplexState& in) {
    const int n = g.n();
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    SimplexState out(n);
    auto& amps = out.entries();
    amps.reserve(in.support_size() * n);
    for (const auto& [mask, a] : in.entries()) {
        for (int i = 0; i < n; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            const std::uint64_t below = mask & (bit - 1);
            const double sgn = (std::popcount(below) & 1) ? -inv : inv;
            amps.emplace_back(mask ^ bit, a * sgn);
        }
    }
    out.normalise_layout();
    return out;
}

SimplexState project_simplices(const Graph& g, const SimplexState& in) {
    SimplexState out(in.n());
    for (const auto& e : in.entries()) {
        if (g.is_clique_mask(e.first)) out.entries().push_back(e);
    }
    return out;
}

SimplexState project_weight(const SimplexState& in, int weight) {
    SimplexState out(in.n());
    for (const auto& e : in.entries()) {
        if (std::popcount(e.first) == weight) out.entries().push_back(e);
    }
    return out;
}

Eigen::MatrixXd boundary_matrix(const Graph& g, int k) {
    const auto cols = enumerate_k_simplices(g, k);
    if (k == 0) return Eigen::MatrixXd::Zero(0, static_cast<Eigen::Index>(cols.size()));
    const auto faces = enumerate_k_simplices(g, k - 1);
    std::unordered_map<std::uint64_t, Eigen::Index> face_idx;
    face_idx.reserve(faces.size() * 2);
    for (std::size_t i = 0; i < faces.size(); ++i) face_idx.emplace(faces[i].mask(), i);

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(faces.size()),
                                              static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& verts = cols[c].vertices;
        const std::uint64_t mask = cols[c].mask();
        for (std::size_t j = 0; j < verts.size(); ++j) {
            const std::uint64_t face = mask ^ (std::uint64_t{1} << verts[j]);
            const double sgn = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^(j+1)
            M(face_idx.at(face), static_cast<Eigen::Index>(c)) = sgn;
        }
    }
    return M;
}

Eigen::MatrixXd dense_laplacian(const Graph& g, int k) {
    const Eigen::MatrixXd down = boundary_matrix(g, k);
    const Eigen::MatrixXd up =
        k + 1 < g.n() ? boundary_matrix(g, k + 1)
                      : Eigen::MatrixXd::Zero(down.cols(), 0);
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(down.cols(), down.cols());
    if (down.rows() > 0) L += down.transpose() * down;  // k = 0 has no faces
    if (up.cols() > 0) L += up * up.transpose();
    return L;
}

}  // namespace bne

#pragma once

#include <Eigen/Dense>

#include "bne/graph.hpp"
#include "bne/state.hpp"

namespace bne {

// One application of B/sqrt(n), B = boundary + coboundary on the full n-qubit
// space: every basis string fans out to the n strings at Hamming distance 1,
// with sign (-1)^(number of set bits below the toggled position).
SimplexState apply_full_boundary(const Graph& g, const SimplexState& in);

// Keep amplitudes whose vertex set is a clique of g (projector P_Gamma).
SimplexState project_simplices(const Graph& g, const SimplexState& in);

// Keep amplitudes whose vertex set has exactly `weight` elements.
SimplexState project_weight(const SimplexState& in, int weight);

// Matrix of boundary_k : C[S_k] -> C[S_{k-1}] in lex simplex bases, sign
// (-1)^(j+1) for removing the j-th smallest vertex; zero-row matrix for k = 0.
Eigen::MatrixXd boundary_matrix(const Graph& g, int k);

// D_k = b_k^T b_k + b_{k+1} b_{k+1}^T on S_k (unnormalised).
Eigen::MatrixXd dense_laplacian(const Graph& g, int k);

}  // namespace bne

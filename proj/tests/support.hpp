#pragma once

#include <cmath>
#include <vector>

#include "csforge/linalg.hpp"
#include "csforge/search.hpp"
#include "csforge/vectors.hpp"

namespace csforge::testing {

inline bool close_rel(double actual, double expected, double rtol, double atol = 0.0) {
    return std::abs(actual - expected) <=
           atol + rtol * std::max({std::abs(actual), std::abs(expected), 1.0});
}

inline RealVector random_vector(TrialRng& rng, std::size_t n, double lo = -1.0,
                                double hi = 1.0) {
    std::vector<double> entries(n);
    for (auto& e : entries) e = lo + rng.next_unit() * (hi - lo);
    return RealVector(std::move(entries));
}

inline RealVector random_nonneg_vector(TrialRng& rng, std::size_t n) {
    return random_vector(rng, n, 0.0, 1.0);
}

inline RealVector random_integer_vector(TrialRng& rng, std::size_t n, int lo, int hi) {
    std::vector<double> entries(n);
    for (auto& e : entries) {
        e = static_cast<double>(lo + static_cast<int>(rng.next_u64() %
                                                      static_cast<std::uint64_t>(hi - lo + 1)));
    }
    return RealVector(std::move(entries));
}

inline DenseMatrix random_matrix(TrialRng& rng, std::size_t rows, std::size_t cols) {
    DenseMatrix A(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) A(i, j) = 2.0 * rng.next_unit() - 1.0;
    }
    return A;
}

inline DenseMatrix random_symmetric(TrialRng& rng, std::size_t n) {
    DenseMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            A(i, j) = A(j, i) = 2.0 * rng.next_unit() - 1.0;
        }
    }
    return A;
}

/// Random orthogonal matrix via Gram-Schmidt on a Gaussian matrix.
inline DenseMatrix random_orthogonal(TrialRng& rng, std::size_t n) {
    std::vector<std::vector<double>> basis;
    while (basis.size() < n) {
        std::vector<double> cand(n);
        for (auto& e : cand) e = rng.next_gaussian();
        for (const auto& q : basis) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += q[i] * cand[i];
            for (std::size_t i = 0; i < n; ++i) cand[i] -= dot * q[i];
        }
        double norm_sq = 0.0;
        for (double e : cand) norm_sq += e * e;
        if (norm_sq < 1e-12) continue;  // redraw near-dependent candidates
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& e : cand) e *= inv;
        basis.push_back(std::move(cand));
    }
    DenseMatrix Q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) Q(i, j) = basis[j][i];
    }
    return Q;
}

}  // namespace csforge::testing

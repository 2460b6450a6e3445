#pragma once

#include <cstddef>
#include <vector>

#include "csforge/vectors.hpp"

namespace csforge {

/// Dense real matrix, row-major storage.
class DenseMatrix {
public:
    /// Zero matrix of the given shape.
    DenseMatrix(std::size_t rows, std::size_t cols);

    /// From row-major entries; rejects size mismatches and non-finite values.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);

    /// Rank-one outer product v w^T.
    static DenseMatrix outer(const RealVector& v, const RealVector& w);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const noexcept {
        return entries_[i * cols_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) noexcept {
        return entries_[i * cols_ + j];
    }

    const std::vector<double>& entries() const noexcept { return entries_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

enum class SpectrumKind { eigenvalues, singular_values };
enum class SortOrder { ascending, descending };

/// Sorted spectrum of a matrix (eigenvalues or singular values).
struct SpectrumVector {
    RealVector values;
    SpectrumKind kind;
    SortOrder order;
};

/// Column-stacking vectorization (a_11, ..., a_n1, a_12, ...).
RealVector vectorize(const DenseMatrix& A);

/// Entrywise 2-norm; computed as norm2(vectorize(A)).
double frobenius_norm(const DenseMatrix& A);

/// Entrywise inner product; computed as inner(vectorize(A), vectorize(B)).
double frobenius_inner(const DenseMatrix& A, const DenseMatrix& B);

DenseMatrix kron_mat(const DenseMatrix& A, const DenseMatrix& B);

/// (x_1 y, x_2 y, ..., x_m y); equals vectorize(y x^T).
RealVector kron_vec(const RealVector& x, const RealVector& y);

/// Eigenvalues of a symmetric matrix via cyclic Jacobi rotations.
/// Symmetry is checked to 1e-12 (max |a_ij - a_ji|).
SpectrumVector sym_eigenvalues(const DenseMatrix& A, SortOrder order);

/// Singular values, descending, via the symmetric Gram matrix of A.
SpectrumVector singular_values(const DenseMatrix& A);

/// Sum of singular values.
double trace_norm(const DenseMatrix& A);

/// Diagonal of a square matrix as a vector.
RealVector diag_vec(const DenseMatrix& A);

double trace(const DenseMatrix& A);
DenseMatrix transpose(const DenseMatrix& A);
DenseMatrix mat_mul(const DenseMatrix& A, const DenseMatrix& B);
RealVector mat_vec(const DenseMatrix& A, const RealVector& v);

}  // namespace csforge

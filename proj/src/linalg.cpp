#include "csforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "csforge/errors.hpp"

namespace csforge {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr int kJacobiSweepCap = 100;
// Off-diagonal Frobenius threshold, relative to ||A||_F.
constexpr double kJacobiOffTol = 1e-14;

void require_same_shape(const DenseMatrix& A, const DenseMatrix& B, const char* op) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw DimensionMismatch(std::string(op) + ": shapes " +
                                std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                                " and " + std::to_string(B.rows()) + "x" +
                                std::to_string(B.cols()) + " differ");
    }
}

void require_square(const DenseMatrix& A, const char* op) {
    if (!A.is_square()) {
        throw NotSquare(std::string(op) + ": matrix is " + std::to_string(A.rows()) +
                        "x" + std::to_string(A.cols()));
    }
}

double off_diagonal_norm(const DenseMatrix& A) {
    double sum = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (i != j) sum += A(i, j) * A(i, j);
        }
    }
    return std::sqrt(sum);
}

// Cyclic Jacobi on a symmetric matrix; returns the (unsorted) diagonal after
// convergence. The input is symmetrized once up front; rotations keep it so.
std::vector<double> jacobi_diagonalize(DenseMatrix A) {
    const std::size_t m = A.rows();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double avg = 0.5 * (A(i, j) + A(j, i));
            A(i, j) = A(j, i) = avg;
        }
    }
    const double scale = frobenius_norm(A);
    if (scale == 0.0) return std::vector<double>(m, 0.0);
    const double threshold = kJacobiOffTol * scale;

    for (int sweep = 0; sweep < kJacobiSweepCap; ++sweep) {
        if (off_diagonal_norm(A) <= threshold) {
            std::vector<double> diag(m);
            for (std::size_t i = 0; i < m; ++i) diag[i] = A(i, i);
            return diag;
        }
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;  // avoids overflow in theta^2
                } else {
                    t = ((theta >= 0.0) ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = A(p, p);
                const double aqq = A(q, q);
                A(p, p) = app - t * apq;
                A(q, q) = aqq + t * apq;
                A(p, q) = A(q, p) = 0.0;
                for (std::size_t r = 0; r < m; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = A(r, p);
                    const double arq = A(r, q);
                    A(r, p) = A(p, r) = arp - s * (arq + tau * arp);
                    A(r, q) = A(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }
    throw ConvergenceFailure("jacobi: off-diagonal norm did not reach threshold in " +
                             std::to_string(kJacobiSweepCap) + " sweeps");
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("DenseMatrix: rows and cols must be positive");
    }
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("DenseMatrix: rows and cols must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw DimensionMismatch("DenseMatrix: entry count " +
                                std::to_string(entries_.size()) + " != " +
                                std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (double e : entries_) {
        if (!std::isfinite(e)) {
            throw std::invalid_argument("DenseMatrix: entries must be finite");
        }
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

DenseMatrix DenseMatrix::outer(const RealVector& v, const RealVector& w) {
    DenseMatrix A(v.dim(), w.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        for (std::size_t j = 0; j < w.dim(); ++j) A(i, j) = v[i] * w[j];
    }
    return A;
}

RealVector vectorize(const DenseMatrix& A) {
    std::vector<double> out;
    out.reserve(A.rows() * A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) {
        for (std::size_t i = 0; i < A.rows(); ++i) out.push_back(A(i, j));
    }
    return RealVector(std::move(out));
}

double frobenius_norm(const DenseMatrix& A) { return norm2(vectorize(A)); }

double frobenius_inner(const DenseMatrix& A, const DenseMatrix& B) {
    require_same_shape(A, B, "frobenius_inner");
    return inner(vectorize(A), vectorize(B));
}

DenseMatrix kron_mat(const DenseMatrix& A, const DenseMatrix& B) {
    DenseMatrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const double a = A(i, j);
            if (a == 0.0) continue;
            for (std::size_t k = 0; k < B.rows(); ++k) {
                for (std::size_t l = 0; l < B.cols(); ++l) {
                    out(i * B.rows() + k, j * B.cols() + l) = a * B(k, l);
                }
            }
        }
    }
    return out;
}

RealVector kron_vec(const RealVector& x, const RealVector& y) {
    std::vector<double> out;
    out.reserve(x.dim() * y.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        for (std::size_t j = 0; j < y.dim(); ++j) out.push_back(x[i] * y[j]);
    }
    return RealVector(std::move(out));
}

SpectrumVector sym_eigenvalues(const DenseMatrix& A, SortOrder order) {
    require_square(A, "sym_eigenvalues");
    double max_asym = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = i + 1; j < A.cols(); ++j) {
            max_asym = std::max(max_asym, std::abs(A(i, j) - A(j, i)));
        }
    }
    if (max_asym > kSymmetryTol) {
        throw NotSymmetric("sym_eigenvalues: max |a_ij - a_ji| = " +
                           std::to_string(max_asym));
    }
    std::vector<double> eig = jacobi_diagonalize(A);
    std::sort(eig.begin(), eig.end());
    if (order == SortOrder::descending) std::reverse(eig.begin(), eig.end());
    return SpectrumVector{RealVector(std::move(eig)), SpectrumKind::eigenvalues, order};
}

SpectrumVector singular_values(const DenseMatrix& A) {
    // One-sided Jacobi (Hestenes): rotate column pairs until mutually
    // orthogonal; the singular values are the final column norms. Unlike the
    // Gram-matrix route, small singular values keep high relative accuracy
    // and structurally zero columns stay exactly zero.
    const bool tall = A.rows() >= A.cols();
    const std::size_t rows = tall ? A.rows() : A.cols();
    const std::size_t n = tall ? A.cols() : A.rows();
    std::vector<std::vector<double>> col(n, std::vector<double>(rows));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < rows; ++r) {
            col[j][r] = tall ? A(r, j) : A(j, r);
        }
    }

    // Rotations on one pair perturb the orthogonality of pairs fixed earlier
    // in the sweep by O(eps), so the reachable floor scales with the column
    // length; a fixed threshold stalls on large matrices.
    const double ortho_tol =
        static_cast<double>(rows) * std::numeric_limits<double>::epsilon();

    bool converged = false;
    for (int sweep = 0; sweep < kJacobiSweepCap && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t r = 0; r < rows; ++r) {
                    alpha += col[i][r] * col[i][r];
                    beta += col[j][r] * col[j][r];
                    gamma += col[i][r] * col[j][r];
                }
                if (std::abs(gamma) <= ortho_tol * std::sqrt(alpha * beta)) continue;
                converged = false;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                double t;
                if (std::abs(zeta) > 1e150) {
                    t = 0.5 / zeta;
                } else {
                    t = ((zeta >= 0.0) ? 1.0 : -1.0) /
                        (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = c * t;
                for (std::size_t r = 0; r < rows; ++r) {
                    const double ai = col[i][r];
                    const double aj = col[j][r];
                    col[i][r] = c * ai - s * aj;
                    col[j][r] = s * ai + c * aj;
                }
            }
        }
    }
    if (!converged) {
        throw ConvergenceFailure("singular_values: column pairs not orthogonal after " +
                                 std::to_string(kJacobiSweepCap) + " sweeps");
    }

    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) {
        double norm_sq = 0.0;
        for (std::size_t r = 0; r < rows; ++r) norm_sq += col[j][r] * col[j][r];
        sv[j] = std::sqrt(norm_sq);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return SpectrumVector{RealVector(std::move(sv)), SpectrumKind::singular_values,
                          SortOrder::descending};
}

double trace_norm(const DenseMatrix& A) {
    const SpectrumVector sv = singular_values(A);
    double sum = 0.0;
    for (double s : sv.values) sum += s;
    return sum;
}

RealVector diag_vec(const DenseMatrix& A) {
    require_square(A, "diag_vec");
    std::vector<double> out(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) out[i] = A(i, i);
    return RealVector(std::move(out));
}

double trace(const DenseMatrix& A) {
    require_square(A, "trace");
    double sum = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i) sum += A(i, i);
    return sum;
}

DenseMatrix transpose(const DenseMatrix& A) {
    DenseMatrix out(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) out(j, i) = A(i, j);
    }
    return out;
}

DenseMatrix mat_mul(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.cols() != B.rows()) {
        throw DimensionMismatch("mat_mul: inner dimensions " + std::to_string(A.cols()) +
                                " and " + std::to_string(B.rows()) + " differ");
    }
    DenseMatrix out(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const double a = A(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) out(i, j) += a * B(k, j);
        }
    }
    return out;
}

RealVector mat_vec(const DenseMatrix& A, const RealVector& v) {
    if (A.cols() != v.dim()) {
        throw DimensionMismatch("mat_vec: matrix has " + std::to_string(A.cols()) +
                                " cols, vector has dim " + std::to_string(v.dim()));
    }
    std::vector<double> out(A.rows(), 0.0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < A.cols(); ++j) sum += A(i, j) * v[j];
        out[i] = sum;
    }
    return RealVector(std::move(out));
}

}  // namespace csforge

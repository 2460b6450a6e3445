#include "csforge/inequalities.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "csforge/errors.hpp"

namespace csforge {

namespace {

constexpr double kProjectionTol = 1e-10;

void require_same_square(const DenseMatrix& X, const DenseMatrix& Y, const char* op) {
    if (!X.is_square() || !Y.is_square()) {
        throw NotSquare(std::string(op) + ": both matrices must be square");
    }
    if (X.rows() != Y.rows()) {
        throw DimensionMismatch(std::string(op) + ": matrix sizes differ");
    }
}

double product_of_norms_squared(const std::vector<RealVector>& vectors) {
    double prod = 1.0;
    for (const auto& v : vectors) prod *= inner(v, v);
    return prod;
}

}  // namespace

InequalityReport check_cs_original(const RealVector& v, const RealVector& w,
                                   const Tolerance& tol) {
    const RealVector v2 = hadamard_power(v, 2.0);
    const RealVector w2 = hadamard_power(w, 2.0);
    const double lhs = norm2(v2) * norm2(w2) - inner(v2, w2);
    const double ip = inner(v, w);
    const double rhs = inner(v, v) * inner(w, w) - ip * ip;
    return make_report("cs-original", lhs, rhs,
                       DigestBuilder().add("v", v).add("w", w).str(), tol);
}

InequalityReport check_matrix_gen(const DenseMatrix& X, const DenseMatrix& Y,
                                  const Tolerance& tol) {
    require_same_square(X, Y, "check_matrix_gen");
    const RealVector x = diag_vec(X);
    const RealVector y = diag_vec(Y);
    const double lhs = norm2(x) * norm2(y) - inner(x, y);
    const double rhs = frobenius_norm(X) * frobenius_norm(Y) - frobenius_inner(X, Y);
    return make_report("matrix-gen", lhs, rhs,
                       DigestBuilder().add("X", X).add("Y", Y).str(), tol);
}

InequalityReport check_eig_gen(const DenseMatrix& X, const DenseMatrix& Y,
                               const Tolerance& tol) {
    require_same_square(X, Y, "check_eig_gen");
    const RealVector x = diag_vec(X);
    const RealVector y = diag_vec(Y);
    // Fixed opposite-order pairing; swapping the two orders gives the same value.
    const RealVector lx = sym_eigenvalues(X, SortOrder::descending).values;
    const RealVector ly = sym_eigenvalues(Y, SortOrder::ascending).values;
    const double lhs = norm2(x) * norm2(y) - inner(x, y);
    const double rhs = norm2(lx) * norm2(ly) - inner(lx, ly);
    return make_report("eig-gen", lhs, rhs,
                       DigestBuilder().add("X", X).add("Y", Y).str(), tol);
}

InequalityReport check_svd_gen(const DenseMatrix& X, const DenseMatrix& Y,
                               const Tolerance& tol) {
    require_same_square(X, Y, "check_svd_gen");
    const RealVector x = diag_vec(X);
    const RealVector y = diag_vec(Y);
    const RealVector sx = singular_values(X).values;
    const RealVector sy = singular_values(Y).values;
    const double lhs = norm2(x) * norm2(y) - inner(sx, sy);
    const double rhs = norm2(sx) * norm2(sy) - inner(x, y);
    return make_report("svd-gen", lhs, rhs,
                       DigestBuilder().add("X", X).add("Y", Y).str(), tol);
}

InequalityReport check_fx_projection(double x, const RealVector& v, const RealVector& w,
                                     const DenseMatrix& P, const Tolerance& tol) {
    if (!(x >= 1.0)) {
        throw ExponentOutOfRange("check_fx_projection: exponent must satisfy x >= 1");
    }
    if (!P.is_square() || P.rows() != v.dim()) {
        throw DimensionMismatch("check_fx_projection: P must be square of the vector dimension");
    }
    const DenseMatrix Pt = transpose(P);
    DenseMatrix sym_defect(P.rows(), P.cols());
    for (std::size_t i = 0; i < P.rows(); ++i) {
        for (std::size_t j = 0; j < P.cols(); ++j) {
            sym_defect(i, j) = P(i, j) - Pt(i, j);
        }
    }
    const DenseMatrix P2 = mat_mul(P, P);
    DenseMatrix idem_defect(P.rows(), P.cols());
    for (std::size_t i = 0; i < P.rows(); ++i) {
        for (std::size_t j = 0; j < P.cols(); ++j) {
            idem_defect(i, j) = P2(i, j) - P(i, j);
        }
    }
    if (frobenius_norm(sym_defect) > kProjectionTol ||
        frobenius_norm(idem_defect) > kProjectionTol) {
        throw NotAProjection("check_fx_projection: P is not a symmetric idempotent within 1e-10");
    }
    const double lhs = f_x(x, mat_vec(P, v), mat_vec(P, w));
    const double rhs = f_x(x, v, w);
    return make_report(
        "fx-projection", lhs, rhs,
        DigestBuilder().add("x", x).add("v", v).add("w", w).add("P", P).str(), tol);
}

InequalityReport check_fp_diag(double x, const std::vector<RealVector>& xs,
                               const std::vector<RealVector>& ys, const Tolerance& tol) {
    if (!(x >= 1.0)) {
        throw ExponentOutOfRange("check_fp_diag: exponent must satisfy x >= 1");
    }
    if (xs.empty() || xs.size() != ys.size()) {
        throw DimensionMismatch("check_fp_diag: need equally many x_j and y_j, at least one");
    }
    RealVector hx = xs[0];
    RealVector hy = ys[0];
    for (std::size_t j = 1; j < xs.size(); ++j) {
        hx = hadamard(hx, xs[j]);
        hy = hadamard(hy, ys[j]);
    }
    const double lhs = f_x(x, hx, hy);
    double norm_prod = 1.0;
    double ip_prod = 1.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        norm_prod *= std::pow(norm2(xs[j]) * norm2(ys[j]), x);
        ip_prod *= std::pow(std::abs(inner(xs[j], ys[j])), x);
    }
    const double rhs = norm_prod - ip_prod;
    DigestBuilder digest;
    digest.add("x", x);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        digest.add("x" + std::to_string(j + 1), xs[j]);
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
        digest.add("y" + std::to_string(j + 1), ys[j]);
    }
    return make_report("fp-diag", lhs, rhs, digest.str(), tol);
}

InequalityReport check_equal_tensors(int p, const RealVector& x, const RealVector& y,
                                     const Tolerance& tol) {
    if (p < 1) {
        throw ExponentOutOfRange("check_equal_tensors: p must be a positive integer");
    }
    const RealVector xp = hadamard_power(x, p);
    const RealVector yp = hadamard_power(y, p);
    const double lhs = norm2(xp) * norm2(yp) - std::abs(inner(xp, yp));
    const double rhs =
        std::pow(norm2(x) * norm2(y), p) - std::pow(std::abs(inner(x, y)), p);
    return make_report("equal-tensors", lhs, rhs,
                       DigestBuilder().add("p", p).add("x", x).add("y", y).str(), tol);
}

InequalityReport check_generalized(const std::vector<RealVector>& vectors,
                                   const PermutationS2p& sigma, const Tolerance& tol) {
    if (vectors.empty()) {
        throw DimensionMismatch("check_generalized: need at least one vector");
    }
    const MultiTensor X = product_tensor(vectors, vectors);
    const double lhs = trace_norm(matrix_view(realign(twirl(X), sigma)));
    const double rhs = product_of_norms_squared(vectors);
    DigestBuilder digest;
    digest.add("sigma", sigma);
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        digest.add("v" + std::to_string(j + 1), vectors[j]);
    }
    return make_report("generalized", lhs, rhs, digest.str(), tol);
}

TripartiteBlocks tripartite_lhs_explicit(const RealVector& v, const RealVector& w,
                                         const RealVector& x) {
    if (v.dim() != w.dim() || v.dim() != x.dim()) {
        throw DimensionMismatch("tripartite_lhs_explicit: dimensions differ");
    }
    const std::size_t n = v.dim();
    const RealVector vw = hadamard(v, w);
    const RealVector xw = hadamard(x, w);
    const double vw_sq = inner(vw, vw);
    const double xw_sq = inner(xw, xw);
    const RealVector v2 = hadamard_power(v, 2.0);
    const RealVector x2 = hadamard_power(x, 2.0);
    const double v4 = inner(v2, v2);
    const double x4 = inner(x2, x2);

    TripartiteBlocks blocks;
    for (std::size_t j = 0; j < n; ++j) {
        const double a_sq =
            v[j] * v[j] * vw_sq + w[j] * w[j] * v4 - v[j] * v[j] * v[j] * v[j] * w[j] * w[j];
        const double b_sq =
            x[j] * x[j] * xw_sq + w[j] * w[j] * x4 - x[j] * x[j] * x[j] * x[j] * w[j] * w[j];
        blocks.paired += std::sqrt(std::max(a_sq, 0.0) * std::max(b_sq, 0.0));
    }
    for (std::size_t i = 0; i < n; ++i) {
        double dv = 0.0;
        double dx = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                dv += v[j] * v[j] * w[k] * w[k];
                dx += x[j] * x[j] * w[k] * w[k];
            }
        }
        const double root = std::sqrt(dv) * std::sqrt(dx);
        blocks.cross += std::abs(v[i] * x[i]) * root;
        blocks.cross_signed += v[i] * x[i] * root;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            blocks.cells += w[i] * w[i] * std::abs(v[i] * v[j] * x[i] * x[j]);
        }
    }
    return blocks;
}

InequalityReport check_tripartite(const RealVector& v, const RealVector& w,
                                  const RealVector& x, const Tolerance& tol) {
    const TripartiteBlocks blocks = tripartite_lhs_explicit(v, w, x);
    const double lhs = blocks.paired + blocks.cross;
    const RealVector vwx = hadamard(hadamard(v, w), x);
    const double rhs = inner(v, v) * inner(w, w) * inner(x, x) + inner(vwx, vwx) -
                       inner(hadamard(v, w), hadamard(x, w)) * inner(v, x);
    return make_report("tripartite", lhs, rhs,
                       DigestBuilder().add("v", v).add("w", w).add("x", x).str(), tol);
}

InequalityReport check_conjecture(double p, const RealVector& v, const RealVector& w,
                                  bool strict, const Tolerance& tol) {
    if (!(p > 0.0)) {
        throw ExponentOutOfRange("check_conjecture: exponent must satisfy p > 0");
    }
    if (v.dim() != w.dim()) {
        throw DimensionMismatch("check_conjecture: dimensions differ");
    }
    for (const RealVector* vec : {&v, &w}) {
        for (double e : *vec) {
            if (strict ? (e <= 0.0) : (e < 0.0)) {
                throw NonPositiveEntries(
                    strict ? "check_conjecture: strict mode requires entries > 0"
                           : "check_conjecture: entries must be >= 0");
            }
        }
    }
    const RealVector vp = hadamard_power(v, p);
    const RealVector wp = hadamard_power(w, p);
    const double lhs = norm2(vp) * norm2(wp) - inner(vp, wp);
    const double rhs = std::pow(norm2(v) * norm2(w), p) - std::pow(inner(v, w), p);
    return make_report("conjecture", lhs, rhs,
                       DigestBuilder().add("p", p).add("v", v).add("w", w).str(), tol);
}

namespace {

const RealVector& vector_arg(const CheckInputs& in, std::size_t idx, const char* checker) {
    if (in.vectors.size() <= idx) {
        throw std::invalid_argument(std::string(checker) + ": missing vector argument " +
                                    std::to_string(idx + 1));
    }
    return in.vectors[idx];
}

const DenseMatrix& matrix_arg(const CheckInputs& in, std::size_t idx, const char* checker) {
    if (in.matrices.size() <= idx) {
        throw std::invalid_argument(std::string(checker) + ": missing matrix argument " +
                                    std::to_string(idx + 1));
    }
    return in.matrices[idx];
}

double exponent_arg(const CheckInputs& in, const char* checker) {
    if (!in.exponent) {
        throw std::invalid_argument(std::string(checker) + ": missing exponent");
    }
    return *in.exponent;
}

std::vector<RegisteredChecker> build_registry() {
    std::vector<RegisteredChecker> reg;
    reg.push_back({"cs-original", "--v <vec> --w <vec>", true,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       return std::vector<InequalityReport>{check_cs_original(
                           vector_arg(in, 0, "cs-original"), vector_arg(in, 1, "cs-original"), tol)};
                   }});
    reg.push_back({"matrix-gen", "--X <mat> --Y <mat>", true,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       return std::vector<InequalityReport>{check_matrix_gen(
                           matrix_arg(in, 0, "matrix-gen"), matrix_arg(in, 1, "matrix-gen"), tol)};
                   }});
    reg.push_back({"eig-gen", "--X <sym mat> --Y <sym mat>", true,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       return std::vector<InequalityReport>{check_eig_gen(
                           matrix_arg(in, 0, "eig-gen"), matrix_arg(in, 1, "eig-gen"), tol)};
                   }});
    reg.push_back({"svd-gen", "--X <mat> --Y <mat>", true,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       return std::vector<InequalityReport>{check_svd_gen(
                           matrix_arg(in, 0, "svd-gen"), matrix_arg(in, 1, "svd-gen"), tol)};
                   }});
    reg.push_back({"fx-projection", "--exp <x>=1> --v <vec> --w <vec> --P <mat>", true,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       return std::vector<InequalityReport>{check_fx_projection(
                           exponent_arg(in, "fx-projection"), vector_arg(in, 0, "fx-projection"),
                           vector_arg(in, 1, "fx-projection"), matrix_arg(in, 0, "fx-projection"),
                           tol)};
                   }});
    reg.push_back({"fp-diag", "--exp <x>=1> --xs <vec;...> --ys <vec;...>", true,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       return std::vector<InequalityReport>{
                           check_fp_diag(exponent_arg(in, "fp-diag"), in.xs, in.ys, tol)};
                   }});
    reg.push_back({"equal-tensors", "--p <int>=1> --v <vec> --w <vec>", true,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       const double p = exponent_arg(in, "equal-tensors");
                       return std::vector<InequalityReport>{
                           check_equal_tensors(static_cast<int>(p),
                                               vector_arg(in, 0, "equal-tensors"),
                                               vector_arg(in, 1, "equal-tensors"), tol)};
                   }});
    reg.push_back({"generalized", "--sigma <2p ints> --v1 <vec> ... --vp <vec>", true,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       if (!in.sigma) {
                           throw std::invalid_argument("generalized: missing --sigma");
                       }
                       return std::vector<InequalityReport>{
                           check_generalized(in.vectors, *in.sigma, tol)};
                   }});
    reg.push_back({"tripartite", "--v <vec> --w <vec> --x <vec>", true,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       return std::vector<InequalityReport>{check_tripartite(
                           vector_arg(in, 0, "tripartite"), vector_arg(in, 1, "tripartite"),
                           vector_arg(in, 2, "tripartite"), tol)};
                   }});
    reg.push_back({"conjecture", "--p <real> --v <vec> --w <vec> [--strict]", false,
                   [](const CheckInputs& in, const Tolerance& tol) {
                       return std::vector<InequalityReport>{check_conjecture(
                           exponent_arg(in, "conjecture"), vector_arg(in, 0, "conjecture"),
                           vector_arg(in, 1, "conjecture"), in.strict, tol)};
                   }});
    return reg;
}

}  // namespace

const std::vector<RegisteredChecker>& checker_registry() {
    static const std::vector<RegisteredChecker> registry = build_registry();
    return registry;
}

const RegisteredChecker* find_checker(const std::string& name) {
    for (const auto& checker : checker_registry()) {
        if (checker.name == name) return &checker;
    }
    return nullptr;
}

}  // namespace csforge

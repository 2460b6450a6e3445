#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csforge/linalg.hpp"
#include "csforge/multilinear.hpp"
#include "csforge/report.hpp"
#include "csforge/vectors.hpp"

namespace csforge {

/// ||v^2|| ||w^2|| - <v^2,w^2>  <=  ||v||^2 ||w||^2 - <v,w>^2.
InequalityReport check_cs_original(const RealVector& v, const RealVector& w,
                                   const Tolerance& tol = {});

/// With x = diag(X), y = diag(Y):
/// ||x|| ||y|| - <x,y>  <=  ||X||_F ||Y||_F - <X,Y>_F.
InequalityReport check_matrix_gen(const DenseMatrix& X, const DenseMatrix& Y,
                                  const Tolerance& tol = {});

/// Symmetric X, Y with oppositely sorted eigenvalue vectors (lambda_X
/// descending, lambda_Y ascending):
/// ||x|| ||y|| - <x,y>  <=  ||lambda_X|| ||lambda_Y|| - <lambda_X,lambda_Y>.
InequalityReport check_eig_gen(const DenseMatrix& X, const DenseMatrix& Y,
                               const Tolerance& tol = {});

/// With both singular value vectors sorted descending:
/// ||x|| ||y|| - <sigma_X,sigma_Y>  <=  ||sigma_X|| ||sigma_Y|| - <x,y>.
InequalityReport check_svd_gen(const DenseMatrix& X, const DenseMatrix& Y,
                               const Tolerance& tol = {});

/// f_x(Pv, Pw) <= f_x(v, w) for an orthogonal projection P. P must be
/// symmetric and idempotent within 1e-10 in Frobenius norm.
InequalityReport check_fx_projection(double x, const RealVector& v, const RealVector& w,
                                     const DenseMatrix& P, const Tolerance& tol = {});

/// Hadamard products against products of norms:
/// f_x(x_1 (.) ... (.) x_p, y_1 (.) ... (.) y_p)
///   <= prod ||x_j||^x ||y_j||^x - prod |<x_j,y_j>|^x.
InequalityReport check_fp_diag(double x, const std::vector<RealVector>& xs,
                               const std::vector<RealVector>& ys,
                               const Tolerance& tol = {});

/// ||x^p|| ||y^p|| - |<x^p,y^p>|  <=  ||x||^p ||y||^p - |<x,y>|^p, integer p >= 1.
InequalityReport check_equal_tensors(int p, const RealVector& x, const RealVector& y,
                                     const Tolerance& tol = {});

/// || R_sigma(T(v_1 v_1^T (x) ... (x) v_p v_p^T)) ||_tr  <=  prod ||v_j||^2.
InequalityReport check_generalized(const std::vector<RealVector>& vectors,
                                   const PermutationS2p& sigma, const Tolerance& tol = {});

/// The three diagonal-block families of R_sigma(T(vv^T (x) ww^T (x) xx^T)) at
/// sigma = (6,5,3,4,2,1). For n <= 3 the total equals the trace norm of the
/// generic tensor pipeline exactly; for larger n the middle family aggregates
/// sub-blocks by Cauchy-Schwarz and the total is an upper bound.
struct TripartiteBlocks {
    /// sum_j ||a_j|| ||b_j|| over the n rank-one (2n-1)x(2n-1) blocks.
    double paired = 0.0;
    /// sum_i |v_i x_i| sqrt(sum v_j^2 w_k^2) sqrt(sum x_j^2 w_k^2) over the
    /// n cross blocks (indices j, k distinct from i and each other).
    double cross = 0.0;
    /// sum_{i != j} w_i^2 |v_i v_j x_i x_j| over the n(n-1) 1x1 blocks.
    double cells = 0.0;
    /// The cross sum with v_i x_i kept signed instead of absolute; recorded
    /// alongside for comparison, not used by the checker.
    double cross_signed = 0.0;

    double total() const { return paired + cross + cells; }
};

TripartiteBlocks tripartite_lhs_explicit(const RealVector& v, const RealVector& w,
                                         const RealVector& x);

/// paired + cross  <=  ||v||^2 ||w||^2 ||x||^2 + ||v(.)w(.)x||^2 - <v(.)w, x(.)w><v,x>.
InequalityReport check_tripartite(const RealVector& v, const RealVector& w,
                                  const RealVector& x, const Tolerance& tol = {});

/// ||v^p|| ||w^p|| - <v^p,w^p>  vs  ||v||^p ||w||^p - <v,w>^p for real p > 0.
/// The relation is conjectural for non-integer p >= 2; `holds` is recorded,
/// never asserted. Strict mode requires strictly positive entries, relaxed
/// mode allows zeros.
InequalityReport check_conjecture(double p, const RealVector& v, const RealVector& w,
                                  bool strict = false, const Tolerance& tol = {});

/// Untyped inputs a registry entry consumes; the CLI fills whichever fields
/// the named checker declares.
struct CheckInputs {
    std::vector<RealVector> vectors;      // in the checker's argument order
    std::vector<DenseMatrix> matrices;    // in the checker's argument order
    std::vector<RealVector> xs, ys;       // for the Hadamard-factor checker
    std::optional<double> exponent;       // x or p
    std::optional<PermutationS2p> sigma;
    bool strict = false;
};

struct RegisteredChecker {
    std::string name;
    std::string usage;
    /// False for conjectural statements: a negative margin is a finding, not
    /// a violation.
    bool proven = true;
    std::function<std::vector<InequalityReport>(const CheckInputs&, const Tolerance&)> run;
};

/// Immutable name -> checker table used by the CLI and the scan harness.
const std::vector<RegisteredChecker>& checker_registry();
const RegisteredChecker* find_checker(const std::string& name);

}  // namespace csforge

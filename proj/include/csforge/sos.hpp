#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "csforge/report.hpp"
#include "csforge/vectors.hpp"

namespace csforge {

/// Exact rational scalar; GMP keeps numerator and denominator coprime with a
/// positive denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Weak composition of k into a fixed number of non-negative parts.
struct Composition {
    std::vector<int> parts;
    int k = 0;
};

/// All weak compositions of k into n parts, in ascending lexicographic order.
/// There are C(n+k-1, n-1) of them.
std::vector<Composition> compositions(int n, int k);

/// k! / prod(parts[i]!), exact. Throws SumMismatch unless sum(parts) == k.
mpz_class multinomial(int k, const Composition& parts);

/// ||v||^{2k} ||w||^{2k} - <v,w>^{2k}, evaluated without square roots as
/// <v,v>^k <w,w>^k - <v,w>^{2k}.
double sos_lhs(const RealVector& v, const RealVector& w, int k);
Rational sos_lhs(const RationalVector& v, const RationalVector& w, int k);

/// The weighted sum of squares over all pairs of compositions:
///   (1/2) sum_{a,b} C(k;a) C(k;b) (prod v_i^{a_i} w_i^{b_i} - prod v_i^{b_i} w_i^{a_i})^2.
/// Equals sos_lhs identically. Guarded at 1e7 composition pairs.
double sos_rhs(const RealVector& v, const RealVector& w, int k);
Rational sos_rhs(const RationalVector& v, const RationalVector& w, int k);

/// sos_lhs - sos_rhs in exact arithmetic; zero for every input.
Rational verify_sos_identity(const RationalVector& v, const RationalVector& w, int k);

/// The two-link chain
///   ||v^{2k}|| ||w^{2k}|| - <v^{2k},w^{2k}>
///     <= ||v^k||^2 ||w^k||^2 - <v^k,w^k>^2
///     <= ||v||^{2k} ||w||^{2k} - <v,w>^{2k},
/// reported as (lower link, upper link).
std::pair<InequalityReport, InequalityReport> chain_check(const RealVector& v,
                                                          const RealVector& w, int k,
                                                          const Tolerance& tol = {});

}  // namespace csforge

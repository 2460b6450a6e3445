#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace csforge {

/// Dense finite-dimensional real vector. Construction rejects empty vectors
/// and non-finite entries.
class RealVector {
public:
    explicit RealVector(std::vector<double> entries);
    RealVector(std::initializer_list<double> entries);

    static RealVector zeros(std::size_t dim);

    std::size_t dim() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const noexcept { return entries_[i]; }
    double& operator[](std::size_t i) noexcept { return entries_[i]; }
    const std::vector<double>& entries() const noexcept { return entries_; }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

private:
    std::vector<double> entries_;
};

/// Entrywise (Hadamard) product.
RealVector hadamard(const RealVector& a, const RealVector& b);

/// Entrywise power v[i]^p. Integer p uses repeated multiplication; a
/// non-integer p requires all entries to be non-negative.
RealVector hadamard_power(const RealVector& v, double p);

/// Dot product.
double inner(const RealVector& a, const RealVector& b);

/// Euclidean norm.
double norm2(const RealVector& v);

/// ||v|| ||w|| - <v,w>. Non-negative for all real inputs. Carries no absolute
/// value on the inner product, unlike f_x; replacing w by -w shows the two
/// conventions reach the same set of values, so both are kept as written.
double f_func(const RealVector& v, const RealVector& w);

/// sqrt(||v||^2 ||w||^2 - <v,w>^2), the parallelogram area spanned by v, w.
double g_func(const RealVector& v, const RealVector& w);

/// ||v||^x ||w||^x - |<v,w>|^x for x >= 1. f_x(2,v,w) equals g_func(v,w)^2.
double f_x(double x, const RealVector& v, const RealVector& w);

/// (1/2) sum_{i != j} (v_i w_j - v_j w_i)^2; equals f_x(2, v, w) identically.
double lagrange_rhs(const RealVector& v, const RealVector& w);

/// a^x + b^x - c^x - d^x for a,b,c,d >= 0 and x >= 1. Non-negative whenever
/// max{a,b} >= max{c,d} and a+b >= c+d.
double four_exp_margin(double a, double b, double c, double d, double x);

}  // namespace csforge

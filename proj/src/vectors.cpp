#include "csforge/vectors.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "csforge/errors.hpp"

namespace csforge {

namespace {

void validate_entries(const std::vector<double>& entries) {
    if (entries.empty()) {
        throw std::invalid_argument("RealVector: dimension must be at least 1");
    }
    for (double e : entries) {
        if (!std::isfinite(e)) {
            throw std::invalid_argument("RealVector: entries must be finite");
        }
    }
}

void require_same_dim(const RealVector& a, const RealVector& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(op) + ": dimensions " +
                                std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()) + " differ");
    }
}

// x^e by repeated squaring, e >= 0.
double pow_uint(double x, std::uint64_t e) {
    double acc = 1.0;
    double base = x;
    while (e != 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

}  // namespace

RealVector::RealVector(std::vector<double> entries) : entries_(std::move(entries)) {
    validate_entries(entries_);
}

RealVector::RealVector(std::initializer_list<double> entries)
    : entries_(entries) {
    validate_entries(entries_);
}

RealVector RealVector::zeros(std::size_t dim) {
    return RealVector(std::vector<double>(dim, 0.0));
}

RealVector hadamard(const RealVector& a, const RealVector& b) {
    require_same_dim(a, b, "hadamard");
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] * b[i];
    return RealVector(std::move(out));
}

RealVector hadamard_power(const RealVector& v, double p) {
    const bool integer_exponent = std::isfinite(p) && p == std::floor(p);
    if (!integer_exponent) {
        for (double e : v) {
            if (e < 0.0) {
                throw NegativeBaseNonIntegerExponent(
                    "hadamard_power: negative entry with non-integer exponent " +
                    std::to_string(p));
            }
        }
    }
    std::vector<double> out(v.dim());
    if (integer_exponent) {
        const bool negative = p < 0.0;
        const auto e = static_cast<std::uint64_t>(std::abs(p));
        for (std::size_t i = 0; i < v.dim(); ++i) {
            const double q = pow_uint(v[i], e);
            out[i] = negative ? 1.0 / q : q;
        }
    } else {
        for (std::size_t i = 0; i < v.dim(); ++i) out[i] = std::pow(v[i], p);
    }
    return RealVector(std::move(out));
}

double inner(const RealVector& a, const RealVector& b) {
    require_same_dim(a, b, "inner");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
    return sum;
}

double norm2(const RealVector& v) { return std::sqrt(inner(v, v)); }

double f_func(const RealVector& v, const RealVector& w) {
    require_same_dim(v, w, "f_func");
    return norm2(v) * norm2(w) - inner(v, w);
}

double g_func(const RealVector& v, const RealVector& w) {
    require_same_dim(v, w, "g_func");
    const double ip = inner(v, w);
    const double det = inner(v, v) * inner(w, w) - ip * ip;
    return std::sqrt(std::max(det, 0.0));
}

double f_x(double x, const RealVector& v, const RealVector& w) {
    if (!(x >= 1.0)) {
        throw ExponentOutOfRange("f_x: exponent must satisfy x >= 1, got " +
                                 std::to_string(x));
    }
    require_same_dim(v, w, "f_x");
    return std::pow(norm2(v) * norm2(w), x) - std::pow(std::abs(inner(v, w)), x);
}

double lagrange_rhs(const RealVector& v, const RealVector& w) {
    require_same_dim(v, w, "lagrange_rhs");
    double sum = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            if (j == i) continue;
            const double cross = v[i] * w[j] - v[j] * w[i];
            sum += cross * cross;
        }
    }
    return 0.5 * sum;
}

double four_exp_margin(double a, double b, double c, double d, double x) {
    if (a < 0.0 || b < 0.0 || c < 0.0 || d < 0.0) {
        throw NegativeInput("four_exp_margin: a, b, c, d must be non-negative");
    }
    if (!(x >= 1.0)) {
        throw ExponentOutOfRange("four_exp_margin: exponent must satisfy x >= 1");
    }
    return std::pow(a, x) + std::pow(b, x) - std::pow(c, x) - std::pow(d, x);
}

}  // namespace csforge

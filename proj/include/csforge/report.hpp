#pragma once

#include <string>
#include <vector>

#include "csforge/linalg.hpp"
#include "csforge/vectors.hpp"

namespace csforge {

class PermutationS2p;

/// Margin rule shared by every checker: an inequality lhs <= rhs holds when
/// rhs - lhs >= -(atol + rtol * max(|lhs|, |rhs|, 1)).
struct Tolerance {
    double atol = 1e-12;
    double rtol = 1e-9;

    double allowance(double lhs, double rhs) const;
    bool holds(double lhs, double rhs) const;
};

/// Outcome of one inequality evaluation. margin = rhs - lhs; inputs is a
/// canonical text rendering so any failure can be replayed.
struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool holds = false;
    std::string inputs;
};

InequalityReport make_report(std::string name, double lhs, double rhs,
                             std::string inputs, const Tolerance& tol = {});

/// Shortest decimal rendering that round-trips a double (17 significant digits).
std::string format_double(double x);

/// Canonical `field=value` digest with a fixed field order (insertion order).
class DigestBuilder {
public:
    DigestBuilder& add(const std::string& field, double value);
    DigestBuilder& add(const std::string& field, int value);
    DigestBuilder& add(const std::string& field, const RealVector& value);
    DigestBuilder& add(const std::string& field, const DenseMatrix& value);
    DigestBuilder& add(const std::string& field, const PermutationS2p& value);
    std::string str() const { return digest_; }

private:
    void append(const std::string& field, const std::string& rendered);
    std::string digest_;
};

/// Single-line `name lhs rhs margin holds` rendering.
std::string render_line(const InequalityReport& report);

/// CSV row matching render_csv_header().
std::string render_csv_row(const InequalityReport& report);
std::string render_csv_header();

/// Flat single-level JSON object with fields name, lhs, rhs, margin, holds, inputs.
std::string render_structured(const InequalityReport& report);

}  // namespace csforge

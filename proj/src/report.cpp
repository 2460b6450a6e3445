#include "csforge/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include <json.hpp>

#include "csforge/multilinear.hpp"

namespace csforge {

double Tolerance::allowance(double lhs, double rhs) const {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    return atol + rtol * scale;
}

bool Tolerance::holds(double lhs, double rhs) const {
    return rhs - lhs >= -allowance(lhs, rhs);
}

InequalityReport make_report(std::string name, double lhs, double rhs,
                             std::string inputs, const Tolerance& tol) {
    InequalityReport report;
    report.name = std::move(name);
    report.lhs = lhs;
    report.rhs = rhs;
    report.margin = rhs - lhs;
    report.holds = tol.holds(lhs, rhs);
    report.inputs = std::move(inputs);
    return report;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void DigestBuilder::append(const std::string& field, const std::string& rendered) {
    if (!digest_.empty()) digest_ += ' ';
    digest_ += field;
    digest_ += '=';
    digest_ += rendered;
}

DigestBuilder& DigestBuilder::add(const std::string& field, double value) {
    append(field, format_double(value));
    return *this;
}

DigestBuilder& DigestBuilder::add(const std::string& field, int value) {
    append(field, std::to_string(value));
    return *this;
}

DigestBuilder& DigestBuilder::add(const std::string& field, const RealVector& value) {
    std::string rendered;
    for (std::size_t i = 0; i < value.dim(); ++i) {
        if (i != 0) rendered += ',';
        rendered += format_double(value[i]);
    }
    append(field, rendered);
    return *this;
}

DigestBuilder& DigestBuilder::add(const std::string& field, const DenseMatrix& value) {
    std::string rendered;
    for (std::size_t i = 0; i < value.rows(); ++i) {
        if (i != 0) rendered += ';';
        for (std::size_t j = 0; j < value.cols(); ++j) {
            if (j != 0) rendered += ',';
            rendered += format_double(value(i, j));
        }
    }
    append(field, rendered);
    return *this;
}

DigestBuilder& DigestBuilder::add(const std::string& field, const PermutationS2p& value) {
    std::string rendered;
    for (int v : value.one_line()) {
        if (!rendered.empty()) rendered += ',';
        rendered += std::to_string(v);
    }
    append(field, rendered);
    return *this;
}

std::string render_line(const InequalityReport& report) {
    return report.name + ' ' + format_double(report.lhs) + ' ' +
           format_double(report.rhs) + ' ' + format_double(report.margin) + ' ' +
           (report.holds ? "true" : "false");
}

std::string render_csv_header() { return "name,lhs,rhs,margin,holds"; }

std::string render_csv_row(const InequalityReport& report) {
    return report.name + ',' + format_double(report.lhs) + ',' +
           format_double(report.rhs) + ',' + format_double(report.margin) + ',' +
           (report.holds ? "true" : "false");
}

std::string render_structured(const InequalityReport& report) {
    nlohmann::ordered_json doc;
    doc["name"] = report.name;
    doc["lhs"] = report.lhs;
    doc["rhs"] = report.rhs;
    doc["margin"] = report.margin;
    doc["holds"] = report.holds;
    doc["inputs"] = report.inputs;
    return doc.dump();
}

}  // namespace csforge

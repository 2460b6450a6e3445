#include "csforge/sos.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "csforge/errors.hpp"

namespace csforge {

namespace {

constexpr std::size_t kPairGuard = 10'000'000;

void require_k_nonnegative(int k, const char* op) {
    if (k < 0) {
        throw std::invalid_argument(std::string(op) + ": k must be non-negative");
    }
}

template <typename Scalar>
Scalar pow_nonneg(const Scalar& base, int e) {
    Scalar acc(1);
    Scalar b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

template <typename Scalar>
Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    Scalar sum(0);
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

template <typename Scalar>
void require_same_dim(const std::vector<Scalar>& v, const std::vector<Scalar>& w) {
    if (v.empty() || v.size() != w.size()) {
        throw DimensionMismatch("sos: vectors must be nonempty and of equal dimension");
    }
}

template <typename Scalar>
Scalar sos_lhs_impl(const std::vector<Scalar>& v, const std::vector<Scalar>& w, int k) {
    require_same_dim(v, w);
    const Scalar vv = dot(v, v);
    const Scalar ww = dot(w, w);
    const Scalar vw = dot(v, w);
    return pow_nonneg(vv, k) * pow_nonneg(ww, k) - pow_nonneg(vw, 2 * k);
}

// Table of entry powers up to k, so each composition pair costs O(n) lookups.
template <typename Scalar>
std::vector<std::vector<Scalar>> power_table(const std::vector<Scalar>& v, int k) {
    std::vector<std::vector<Scalar>> table(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        table[i].resize(k + 1);
        table[i][0] = Scalar(1);
        for (int e = 1; e <= k; ++e) table[i][e] = table[i][e - 1] * v[i];
    }
    return table;
}

template <typename Scalar>
Scalar from_mpz(const mpz_class& z) {
    return Scalar(z);
}

template <>
double from_mpz<double>(const mpz_class& z) {
    return z.get_d();
}

void check_pair_guard(int n, int k) {
    mpz_class count;
    mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(n + k - 1),
                 static_cast<unsigned long>(n - 1));
    if (count * count > kPairGuard) {
        throw SizeGuardExceeded("sos_rhs: " + count.get_str() +
                                "^2 composition pairs exceed guard of " +
                                std::to_string(kPairGuard));
    }
}

template <typename Scalar>
Scalar sos_rhs_impl(const std::vector<Scalar>& v, const std::vector<Scalar>& w, int k) {
    require_same_dim(v, w);
    const int n = static_cast<int>(v.size());
    check_pair_guard(n, k);
    const std::vector<Composition> comps = compositions(n, k);
    const std::size_t m = comps.size();

    const auto vp = power_table(v, k);
    const auto wp = power_table(w, k);
    std::vector<Scalar> weights(m);
    for (std::size_t a = 0; a < m; ++a) {
        weights[a] = from_mpz<Scalar>(multinomial(k, comps[a]));
    }

    Scalar sum(0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            Scalar left(1), right(1);
            for (int i = 0; i < n; ++i) {
                left *= vp[i][comps[a].parts[i]] * wp[i][comps[b].parts[i]];
                right *= vp[i][comps[b].parts[i]] * wp[i][comps[a].parts[i]];
            }
            const Scalar diff = left - right;
            sum += weights[a] * weights[b] * diff * diff;
        }
    }
    return sum / Scalar(2);
}

}  // namespace

std::vector<Composition> compositions(int n, int k) {
    if (n < 1) throw std::invalid_argument("compositions: n must be at least 1");
    require_k_nonnegative(k, "compositions");
    std::vector<Composition> out;
    std::vector<int> parts(n, 0);
    // Ascending lexicographic: recurse on the first part from 0 to the remainder.
    auto emit = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == n - 1) {
            parts[slot] = remaining;
            out.push_back(Composition{parts, k});
            return;
        }
        for (int first = 0; first <= remaining; ++first) {
            parts[slot] = first;
            self(self, slot + 1, remaining - first);
        }
    };
    emit(emit, 0, k);
    return out;
}

mpz_class multinomial(int k, const Composition& parts) {
    require_k_nonnegative(k, "multinomial");
    long long total = 0;
    for (int a : parts.parts) {
        if (a < 0) throw std::invalid_argument("multinomial: negative part");
        total += a;
    }
    if (total != k) {
        throw SumMismatch("multinomial: parts sum to " + std::to_string(total) +
                          ", expected k = " + std::to_string(k));
    }
    // Product of binomials over prefix sums: C(a1, a1) C(a1+a2, a2) ...
    mpz_class result = 1;
    long long prefix = 0;
    for (int a : parts.parts) {
        prefix += a;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(prefix),
                     static_cast<unsigned long>(a));
        result *= binom;
    }
    return result;
}

double sos_lhs(const RealVector& v, const RealVector& w, int k) {
    require_k_nonnegative(k, "sos_lhs");
    return sos_lhs_impl(v.entries(), w.entries(), k);
}

Rational sos_lhs(const RationalVector& v, const RationalVector& w, int k) {
    require_k_nonnegative(k, "sos_lhs");
    return sos_lhs_impl(v, w, k);
}

double sos_rhs(const RealVector& v, const RealVector& w, int k) {
    require_k_nonnegative(k, "sos_rhs");
    return sos_rhs_impl(v.entries(), w.entries(), k);
}

Rational sos_rhs(const RationalVector& v, const RationalVector& w, int k) {
    require_k_nonnegative(k, "sos_rhs");
    return sos_rhs_impl(v, w, k);
}

Rational verify_sos_identity(const RationalVector& v, const RationalVector& w, int k) {
    if (k < 1) throw std::invalid_argument("verify_sos_identity: k must be at least 1");
    return sos_lhs(v, w, k) - sos_rhs(v, w, k);
}

std::pair<InequalityReport, InequalityReport> chain_check(const RealVector& v,
                                                          const RealVector& w, int k,
                                                          const Tolerance& tol) {
    if (k < 1) throw std::invalid_argument("chain_check: k must be at least 1");
    const RealVector vk = hadamard_power(v, k);
    const RealVector wk = hadamard_power(w, k);
    const RealVector v2k = hadamard_power(v, 2 * k);
    const RealVector w2k = hadamard_power(w, 2 * k);

    const double low = norm2(v2k) * norm2(w2k) - inner(v2k, w2k);
    const double mid_ip = inner(vk, wk);
    const double mid = inner(vk, vk) * inner(wk, wk) - mid_ip * mid_ip;
    const double high = sos_lhs(v, w, k);

    const std::string digest =
        DigestBuilder().add("v", v).add("w", w).add("k", k).str();
    return {make_report("power-chain-lower", low, mid, digest, tol),
            make_report("power-chain-upper", mid, high, digest, tol)};
}

}  // namespace csforge

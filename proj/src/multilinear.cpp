#include "csforge/multilinear.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "csforge/errors.hpp"

namespace csforge {

namespace {

constexpr std::size_t kDenseSideGuard = 1024;

std::size_t checked_power(std::size_t n, std::size_t p) {
    std::size_t side = 1;
    for (std::size_t m = 0; m < p; ++m) {
        if (side > kDenseSideGuard / n + 1) {
            throw SizeGuardExceeded("MultiTensor: n^p exceeds dense guard " +
                                    std::to_string(kDenseSideGuard));
        }
        side *= n;
    }
    if (side > kDenseSideGuard) {
        throw SizeGuardExceeded("MultiTensor: n^p = " + std::to_string(side) +
                                " exceeds dense guard " + std::to_string(kDenseSideGuard));
    }
    return side;
}

void decode_slots(std::size_t flat, std::size_t n, std::size_t two_p,
                  std::vector<std::size_t>& slots) {
    for (std::size_t m = two_p; m-- > 0;) {
        slots[m] = flat % n;
        flat /= n;
    }
}

}  // namespace

PermutationS2p::PermutationS2p(const std::vector<int>& one_based_image) {
    const std::size_t len = one_based_image.size();
    if (len == 0 || len % 2 != 0) {
        throw std::invalid_argument("PermutationS2p: image length must be even and positive");
    }
    std::vector<bool> seen(len, false);
    image_.resize(len);
    for (std::size_t m = 0; m < len; ++m) {
        const int val = one_based_image[m];
        if (val < 1 || static_cast<std::size_t>(val) > len) {
            throw std::invalid_argument("PermutationS2p: image value " + std::to_string(val) +
                                        " outside 1.." + std::to_string(len));
        }
        if (seen[val - 1]) {
            throw std::invalid_argument("PermutationS2p: image value " + std::to_string(val) +
                                        " repeated; one-line notation requires a bijection");
        }
        seen[val - 1] = true;
        image_[m] = static_cast<std::size_t>(val - 1);
    }
}

PermutationS2p::PermutationS2p(ZeroBasedTag, std::vector<std::size_t> zero_based)
    : image_(std::move(zero_based)) {}

PermutationS2p PermutationS2p::identity(std::size_t two_p) {
    std::vector<std::size_t> img(two_p);
    for (std::size_t m = 0; m < two_p; ++m) img[m] = m;
    return PermutationS2p(ZeroBasedTag{}, std::move(img));
}

PermutationS2p PermutationS2p::inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t m = 0; m < image_.size(); ++m) inv[image_[m]] = m;
    return PermutationS2p(ZeroBasedTag{}, std::move(inv));
}

std::vector<int> PermutationS2p::one_line() const {
    std::vector<int> out(image_.size());
    for (std::size_t m = 0; m < image_.size(); ++m) out[m] = static_cast<int>(image_[m] + 1);
    return out;
}

MultiTensor::MultiTensor(std::size_t n, std::size_t parties) : n_(n), p_(parties) {
    if (n == 0 || parties == 0) {
        throw std::invalid_argument("MultiTensor: n and p must be positive");
    }
    side_ = checked_power(n, parties);
    entries_.assign(side_ * side_, 0.0);
}

std::size_t MultiTensor::flat_index(const std::vector<std::size_t>& slots) const {
    if (slots.size() != 2 * p_) {
        throw DimensionMismatch("MultiTensor: expected " + std::to_string(2 * p_) +
                                " slot indices, got " + std::to_string(slots.size()));
    }
    std::size_t flat = 0;
    for (std::size_t m = 0; m < 2 * p_; ++m) {
        if (slots[m] >= n_) {
            throw std::out_of_range("MultiTensor: slot index out of range");
        }
        flat = flat * n_ + slots[m];
    }
    return flat;
}

double MultiTensor::at(const std::vector<std::size_t>& slots) const {
    return entries_[flat_index(slots)];
}

void MultiTensor::set(const std::vector<std::size_t>& slots, double value) {
    entries_[flat_index(slots)] = value;
}

MultiTensor product_tensor(const std::vector<RealVector>& vectors,
                           const std::vector<RealVector>& covectors) {
    if (vectors.empty() || vectors.size() != covectors.size()) {
        throw DimensionMismatch("product_tensor: need p vectors and p covectors");
    }
    const std::size_t p = vectors.size();
    const std::size_t n = vectors[0].dim();
    for (const auto& v : vectors) {
        if (v.dim() != n) throw DimensionMismatch("product_tensor: mixed dimensions");
    }
    for (const auto& w : covectors) {
        if (w.dim() != n) throw DimensionMismatch("product_tensor: mixed dimensions");
    }
    MultiTensor X(n, p);
    std::vector<std::size_t> slots(2 * p, 0);
    const std::size_t total = X.side() * X.side();
    for (std::size_t flat = 0; flat < total; ++flat) {
        decode_slots(flat, n, 2 * p, slots);
        double val = 1.0;
        for (std::size_t m = 0; m < p; ++m) {
            val *= vectors[m][slots[m]] * covectors[m][slots[p + m]];
        }
        X.flat()[flat] = val;
    }
    return X;
}

DenseMatrix matrix_view(const MultiTensor& X) {
    // Storage is already row-major over (row multi-index, column multi-index).
    return DenseMatrix(X.side(), X.side(), X.flat());
}

MultiTensor twirl(const MultiTensor& X) {
    const std::size_t n = X.local_dim();
    const std::size_t p = X.parties();
    MultiTensor out(n, p);
    std::vector<std::size_t> slots(2 * p, 0);
    std::vector<std::size_t> rows(p), cols(p);
    const std::size_t total = X.side() * X.side();
    for (std::size_t flat = 0; flat < total; ++flat) {
        const double val = X.flat()[flat];
        if (val == 0.0) continue;
        decode_slots(flat, n, 2 * p, slots);
        rows.assign(slots.begin(), slots.begin() + p);
        cols.assign(slots.begin() + p, slots.end());
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
        if (rows == cols) out.flat()[flat] = val;
    }
    return out;
}

MultiTensor realign(const MultiTensor& X, const PermutationS2p& sigma) {
    const std::size_t n = X.local_dim();
    const std::size_t p = X.parties();
    if (sigma.size() != 2 * p) {
        throw PermutationLengthMismatch("realign: permutation length " +
                                        std::to_string(sigma.size()) + " != 2p = " +
                                        std::to_string(2 * p));
    }
    const PermutationS2p inv = sigma.inverse();
    MultiTensor out(n, p);
    std::vector<std::size_t> s(2 * p, 0), r(2 * p, 0);
    const std::size_t total = X.side() * X.side();
    for (std::size_t flat = 0; flat < total; ++flat) {
        decode_slots(flat, n, 2 * p, s);
        // r_k = s_{sigma^{-1}(k)}, the slot-relabeling extension of the
        // rank-one rule.
        for (std::size_t k = 0; k < 2 * p; ++k) r[k] = s[inv.image_of(k)];
        out.flat()[flat] = X.flat()[X.flat_index(r)];
    }
    return out;
}

RealVector diag_project(const RealVector& x, std::size_t n, std::size_t p) {
    std::size_t side = 1;
    for (std::size_t m = 0; m < p; ++m) side *= n;
    if (x.dim() != side) {
        throw DimensionMismatch("diag_project: input dim " + std::to_string(x.dim()) +
                                " != n^p = " + std::to_string(side));
    }
    RealVector out = RealVector::zeros(side);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t pos = 0;
        for (std::size_t m = 0; m < p; ++m) pos = pos * n + j;
        out[pos] = x[pos];
    }
    return out;
}

}  // namespace csforge

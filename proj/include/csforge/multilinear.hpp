#pragma once

#include <cstddef>
#include <vector>

#include "csforge/linalg.hpp"
#include "csforge/vectors.hpp"

namespace csforge {

/// Permutation of {1..2p} in one-line notation. The constructor takes the
/// 1-based image array (image[m] = sigma(m+1)) and requires every value to
/// appear exactly once, which rules out cycle notation at parse time.
class PermutationS2p {
public:
    explicit PermutationS2p(const std::vector<int>& one_based_image);

    static PermutationS2p identity(std::size_t two_p);

    std::size_t size() const noexcept { return image_.size(); }

    /// sigma(m) for 0-based m, 0-based result.
    std::size_t image_of(std::size_t m) const noexcept { return image_[m]; }

    PermutationS2p inverse() const;

    /// 1-based one-line rendering, matching the constructor input.
    std::vector<int> one_line() const;

private:
    struct ZeroBasedTag {};
    PermutationS2p(ZeroBasedTag, std::vector<std::size_t> zero_based);
    std::vector<std::size_t> image_;
};

/// Dense order-2p tensor over {1..n}^{2p}, the coefficient array of an
/// element of (M_n)^{(x)p}. Slots 0..p-1 are the per-party row indices,
/// slots p..2p-1 the per-party column indices. Storage is row-major over
/// the slot tuple, so the flat buffer is also the n^p x n^p matrix view.
class MultiTensor {
public:
    /// Zero tensor; throws SizeGuardExceeded when n^p > 1024.
    MultiTensor(std::size_t n, std::size_t parties);

    std::size_t local_dim() const noexcept { return n_; }
    std::size_t parties() const noexcept { return p_; }
    /// n^p, the side length of the matrix view.
    std::size_t side() const noexcept { return side_; }

    double at(const std::vector<std::size_t>& slots) const;
    void set(const std::vector<std::size_t>& slots, double value);

    const std::vector<double>& flat() const noexcept { return entries_; }
    std::vector<double>& flat() noexcept { return entries_; }

    std::size_t flat_index(const std::vector<std::size_t>& slots) const;

private:
    std::size_t n_;
    std::size_t p_;
    std::size_t side_;
    std::vector<double> entries_;
};

/// v_1 w_1^T (x) ... (x) v_p w_p^T as an order-2p tensor. All 2p vectors
/// must share the same dimension.
MultiTensor product_tensor(const std::vector<RealVector>& vectors,
                           const std::vector<RealVector>& covectors);

/// n^p x n^p matrix with Kronecker-ordered row and column multi-indices;
/// for product inputs this equals the iterated kron_mat of the factors.
DenseMatrix matrix_view(const MultiTensor& X);

/// Local diagonal unitary twirl: keeps exactly the entries whose row-index
/// multiset equals the column-index multiset, zeroes the rest.
MultiTensor twirl(const MultiTensor& X);

/// Realignment by sigma in S_{2p}: the linear extension of
///   v_1 v_{p+1}^T (x) ... (x) v_p v_{2p}^T  |->
///   v_{sigma(1)} v_{sigma(p+1)}^T (x) ... (x) v_{sigma(p)} v_{sigma(2p)}^T,
/// i.e. output entry at slot tuple s reads the input at r with r_sigma(m) = s_m.
MultiTensor realign(const MultiTensor& X, const PermutationS2p& sigma);

/// Orthogonal projection of an n^p vector onto span{e_j^(x)p}: coordinates
/// off the p-fold diagonal positions are zeroed.
RealVector diag_project(const RealVector& x, std::size_t n, std::size_t p);

}  // namespace csforge

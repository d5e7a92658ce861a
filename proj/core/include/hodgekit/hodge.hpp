#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgekit/filtration.hpp"

namespace hodge {

/* Mixed Hodge structure data on Q^n: an increasing weight filtration W with
   real (rational) steps and a decreasing filtration F on the Gaussian
   extension of the same coordinate space.  validate_mhs decides whether the
   data is an actual mixed structure. */
struct MixedHodge {
    size_t dim = 0;
    FilteredSpace W;  // increasing, real
    FilteredSpace F;  // decreasing
};

struct PureCheck {
    bool ok = false;
    int weight = 0;
    std::optional<int> witness_p;  // first p with F^p (+) conj F^{n+1-p} != V
    std::map<std::pair<int, int>, size_t> hodge_numbers;  // h^{pq}, p+q = weight
};

// Pure weight-n condition on C^dim: F exhaustive and Hausdorff, and
// F^p direct-sum conj(F^{n+1-p}) is everything, for every p.
PureCheck validate_pure(size_t dim, const FilteredSpace& F, int n);

struct MhsReport {
    bool ok = false;
    bool w_real = false, w_exhaustive = false, w_hausdorff = false, f_exhaustive = false;
    std::vector<PureCheck> weights;       // one per weight with nonzero gr
    std::map<int, size_t> gr_dims;
    std::string failure;        // empty when ok
    std::string failure_class;  // "", "not-real", "not-exhaustive", "not-hausdorff", "not-opposed"
};

MhsReport validate_mhs(const MixedHodge& m);

MixedHodge tate_twist(const MixedHodge& m, int n);
// The 1-dimensional twist object itself: weight -2n, type (-n,-n).
MixedHodge tate_object(int n);

MixedHodge tensor_mhs(const MixedHodge& a, const MixedHodge& b);
MixedHodge dual_mhs(const MixedHodge& a);
MixedHodge hom_mhs(const MixedHodge& a, const MixedHodge& b);  // dual(a) (x) b

/* Bigraded decomposition of C^n indexed by (p,q).  The constructor only
   demands a direct-sum decomposition; conj V^{pq} = V^{qp} is a separate
   predicate (it holds for split structures, and only up to lower-order terms
   for the canonical bigrading of a general mixed structure).  The rational
   weight helpers require it. */
class BigradedSpace {
public:
    BigradedSpace() : dim_(0) {}
    BigradedSpace(size_t dim, std::map<std::pair<int, int>, Subspace> pieces);

    size_t dim() const { return dim_; }
    const std::map<std::pair<int, int>, Subspace>& pieces() const { return pieces_; }
    const Subspace& piece(int p, int q) const;  // zero subspace when absent
    bool has_piece(int p, int q) const { return pieces_.count(std::make_pair(p, q)) != 0; }

    bool is_conj_symmetric() const;  // conj V^{pq} == V^{qp} for every piece

    int wlo() const;  // smallest p+q present
    int whi() const;

    Subspace weight_space(int m) const;              // complex span, conj-stable
    std::map<int, Subspace> weight_spaces_real() const;

    FilteredSpace weight_filtration() const;         // increasing, real steps
    FilteredSpace split_hodge_filtration() const;    // F^p = sum of pieces with first index >= p

    // Concatenated piece bases (map order) and its inverse: block coordinates.
    const Matrix& block_basis() const { return block_; }
    const Matrix& block_basis_inv() const { return block_inv_; }
    // Half-open column range of piece (p,q) inside block coordinates.
    std::pair<size_t, size_t> block_range(int p, int q) const;

    friend bool operator==(const BigradedSpace& a, const BigradedSpace& b) {
        return a.dim_ == b.dim_ && a.pieces_ == b.pieces_;
    }
    friend bool operator!=(const BigradedSpace& a, const BigradedSpace& b) { return !(a == b); }

private:
    size_t dim_;
    std::map<std::pair<int, int>, Subspace> pieces_;
    Subspace zero_;
    Matrix block_, block_inv_;
    std::map<std::pair<int, int>, std::pair<size_t, size_t>> ranges_;
};

BigradedSpace tate_twist(const BigradedSpace& g, int n);

/* Weight-graded real decomposition of Q^n; the split-twistor counterpart of
   BigradedSpace. */
class WeightGradedSpace {
public:
    WeightGradedSpace() : dim_(0) {}
    WeightGradedSpace(size_t dim, std::map<int, Subspace> pieces);

    size_t dim() const { return dim_; }
    const std::map<int, Subspace>& pieces() const { return pieces_; }
    const Subspace& piece(int m) const;
    bool has_piece(int m) const { return pieces_.count(m) != 0; }
    int wlo() const { return pieces_.begin()->first; }
    int whi() const { return pieces_.rbegin()->first; }

    FilteredSpace weight_filtration() const;

    const Matrix& block_basis() const { return block_; }
    const Matrix& block_basis_inv() const { return block_inv_; }
    std::pair<size_t, size_t> block_range(int m) const;

    friend bool operator==(const WeightGradedSpace& a, const WeightGradedSpace& b) {
        return a.dim_ == b.dim_ && a.pieces_ == b.pieces_;
    }

private:
    size_t dim_;
    std::map<int, Subspace> pieces_;
    Matrix block_, block_inv_;
    std::map<int, std::pair<size_t, size_t>> ranges_;
};

WeightGradedSpace weight_graded(const BigradedSpace& g);

// Twistor bookkeeping: graded ranks and slope labels of a weight grading.
struct MtsReport {
    size_t dim = 0;
    std::map<int, size_t> rank;  // weight -> rank; slope label equals the weight
    bool graded_total_ok = false;
};

MtsReport mts_report(const WeightGradedSpace& g);

/* Canonical bigraded splitting of a valid mixed structure:
   I^{pq} = (F^p n W_{p+q}) n (conj F^q n W_{p+q} + sum_{j>=2} conj F^{q-j+1} n W_{p+q-j}).
   Postconditions, asserted here: the pieces decompose C^n, F and W are
   recovered as the obvious partial sums, and each I^{pq} projects onto the
   (p,q) part of the pure structure on gr^W_{p+q}. */
BigradedSpace deligne_bigrading(const MixedHodge& m);

}  // namespace hodge

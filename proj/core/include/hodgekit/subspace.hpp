#pragma once

#include <vector>

#include "hodgekit/linalg.hpp"

namespace hodge {

/* Subspace of k^n (k = exact scalars), stored as a basis matrix in reduced
   column-echelon form: each column's topmost nonzero entry is 1, pivot rows
   strictly increase left to right, and every pivot row is zero in the other
   columns.  The form is a canonical representative of the span, so equality
   of subspaces is equality of representations. */
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(size_t ambient);
    static Subspace full(size_t ambient);
    // Span of the columns of `vectors` (echelonized on construction).
    static Subspace span(size_t ambient, const Matrix& vectors);
    static Subspace span_vec(size_t ambient, const std::vector<std::vector<Scalar>>& vectors);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivot_rows() const { return pivots_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }
    bool is_real() const { return basis_.is_real(); }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;

    // Coordinates of v in the echelon basis; nullopt when v is outside.
    std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

    Subspace conj() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    size_t ambient_;
    Matrix basis_;                 // ambient_ x dim, reduced column echelon
    std::vector<size_t> pivots_;   // pivot row per column
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

Subspace image(const Matrix& f);                         // column span
Subspace kernel(const Matrix& f);
Subspace apply(const Matrix& f, const Subspace& s);      // f(s)
Subspace preimage(const Matrix& f, const Subspace& s);   // f^{-1}(s)

/* Quotient (ambient or W) / U.  `projection` kills U; `section` embeds the
   quotient back so that projection * section = id.  The section is spanned
   by the non-pivot coordinates of U (ascending), which fixes the choice
   deterministically.  The two-argument form quotients W by U (U must lie in
   W); its maps are ambient-sized but only meaningful on W. */
struct Quotient {
    size_t dim;
    Matrix projection;  // dim x ambient
    Matrix section;     // ambient x dim
};

Quotient quotient(const Subspace& u);
Quotient quotient(const Subspace& w, const Subspace& u);

// Annihilator of s inside the dual of the ambient (standard-basis pairing).
Subspace annihilator(const Subspace& s);

// Real points of a conjugation-stable subspace, as a subspace over the
// rationals with a real echelon basis; dim_Q equals dim over the Gaussians.
Subspace real_points(const Subspace& s);

// Matrix of f restricted to dom, expressed in the echelon bases of dom and
// cod.  Throws ErrorKind::Reject if f does not map dom into cod.
Matrix restrict_map(const Matrix& f, const Subspace& dom, const Subspace& cod);

// Span of {x (x) y} for x in a, y in b, inside the Kronecker ambient.
Subspace tensor_pair(const Subspace& a, const Subspace& b);

}  // namespace hodge

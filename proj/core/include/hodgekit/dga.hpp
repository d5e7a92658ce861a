#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodgekit/linalg.hpp"

namespace hodge {

/* Finite-dimensional graded-commutative DGA on a degree window 0..top, with
   optional integer weight labels per basis element.  The product in degrees
   (p,q) is a matrix A^p (x) A^q -> A^{p+q} in Kronecker column order; absent
   product matrices and differentials are zero.  Degree 0 is required to be
   the ground field spanned by the unit. */
struct Dga {
    std::map<int, size_t> dims;                       // contiguous keys from 0
    std::map<int, std::vector<int>> weights;          // empty map = unweighted
    std::map<int, Matrix> diff;                       // diff[n]: A^n -> A^{n+1}
    std::map<std::pair<int, int>, Matrix> products;   // mu[(p,q)], dim_{p+q} x dim_p*dim_q

    int top() const { return dims.empty() ? -1 : dims.rbegin()->first; }
    size_t dim_at(int n) const;
    Matrix diff_at(int n) const;
    Matrix product_at(int p, int q) const;
    bool weighted() const { return !weights.empty(); }
    int weight_of(int n, size_t i) const;

    friend bool operator==(const Dga& a, const Dga& b) {
        return a.dims == b.dims && a.weights == b.weights && a.diff == b.diff &&
               a.products == b.products;
    }
    friend bool operator!=(const Dga& a, const Dga& b) { return !(a == b); }
};

// e_j (x) e_i  ->  e_i (x) e_j on A^p (x) A^q coordinates.
Matrix kron_swap(size_t dim_p, size_t dim_q);

struct DgaCheck {
    bool ok = true;
    std::string failure;  // names the witnessing degrees / basis triple
};

/* Shapes, unit axioms, d^2 = 0, Leibniz, graded commutativity with Koszul
   signs, associativity, and weight additivity of d and of the product. */
DgaCheck validate_dga(const Dga& a);

// Cohomology dimensions per degree (and per weight when labelled).
std::map<int, size_t> dga_cohomology_dims(const Dga& a);
std::map<int, std::map<int, size_t>> dga_cohomology_weight_dims(const Dga& a);

}  // namespace hodge

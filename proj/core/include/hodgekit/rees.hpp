#pragma once

#include <map>
#include <utility>

#include "hodgekit/filtration.hpp"

namespace hodge {

/* Rees module of a filtration: one graded piece per index (the filtration
   step itself), connected by the inclusion-induced shift map written in the
   echelon bases of the two steps.  Flatness is witnessed by injectivity of
   every shift, and the cokernel dimensions are the graded dimensions. */
struct ReesModule {
    Direction dir;
    int lo, hi;
    std::map<int, Subspace> piece;
    // Increasing: shift[n] : piece[n] -> piece[n+1]; decreasing: piece[n] -> piece[n-1].
    std::map<int, Matrix> shift;
    std::map<int, size_t> gr_dim;  // cokernel dimension of the shift out of n
    bool flat;
};

ReesModule rees_single(const FilteredSpace& f);

/* Double Rees module of a decreasing filtration together with its conjugate:
   piece(p,q) = F^p  intersect  conj(F^q), with the two inclusion shifts that
   lower p respectively q.  real_pair_points extracts the rational points of
   the conjugation-stable subspace piece(p,q) + piece(q,p); its dimension
   over Q equals the dimension of that sum over the Gaussians. */
struct DoubleRees {
    int lo, hi;  // window of F; pieces are indexed over [lo, hi]^2
    std::map<std::pair<int, int>, Subspace> piece;
    std::map<std::pair<int, int>, Matrix> shift_p;  // (p,q) -> (p-1,q)
    std::map<std::pair<int, int>, Matrix> shift_q;  // (p,q) -> (p,q-1)
    bool flat;
};

DoubleRees rees_double(const FilteredSpace& f);

const Subspace& double_rees_piece(const DoubleRees& m, int p, int q);
Subspace real_pair_points(const DoubleRees& m, int p, int q);
size_t real_pair_dim(const DoubleRees& m, int p, int q);

}  // namespace hodge

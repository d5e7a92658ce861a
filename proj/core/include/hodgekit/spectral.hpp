#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodgekit/filtration.hpp"

namespace hodge {

/* Bounded cochain complex with an increasing filtration per degree.  Degrees
   live on a contiguous window; everything outside is zero.  A missing
   differential is the zero map, so diff_at is total, and step() reads the
   filtration through its saturation, so it is total in the index too. */
struct FilteredComplex {
    std::map<int, size_t> dims;          // degree -> dimension, contiguous keys
    std::map<int, Matrix> diff;          // diff[n]: C^n -> C^{n+1}
    std::map<int, FilteredSpace> filt;   // increasing J on C^n

    int nlo() const { return dims.begin()->first; }
    int nhi() const { return dims.rbegin()->first; }
    size_t dim_at(int n) const;
    Matrix diff_at(int n) const;         // always dim(n+1) x dim(n)
    Subspace step(int n, int r) const;   // J_r C^n
    int slo() const;                     // union filtration window over degrees
    int shi() const;
};

// Exhaustive-at-0, zero-below trivial filtration (single jump).
FilteredSpace trivial_filtration(size_t ambient);

struct ComplexCheck {
    bool ok = true;
    std::string failure;
};

// d^2 = 0, d preserves every step, per-degree filtrations increasing,
// exhaustive and bounded below, shapes consistent.
ComplexCheck validate_complex(const FilteredComplex& c);

/* Shifted filtration (Dec J)_r C^n = {a in J_{r-n} C^n : da in J_{r-n-1} C^{n+1}},
   decided literally, membership by membership.  Same complex, new filtration. */
FilteredComplex decalage(const FilteredComplex& c);

/* One page of the spectral sequence of the filtration: entries keyed by
   (filtration index s, total degree n), differential of bidegree (-r, +1).
   Zero entries are not stored; d holds a matrix for every stored source
   whose target is stored too. */
struct SpectralPage {
    int r = 0;
    std::map<std::pair<int, int>, size_t> dims;
    std::map<std::pair<int, int>, Matrix> d;  // at (s,n), mapping into (s-r, n+1)

    size_t dim_at(int s, int n) const;
    size_t total_dim() const;
};

// Pages 0..r_max.  E_0 = gr^J C; each next page is the homology of the
// previous one (asserted dimension by dimension while building).
std::vector<SpectralPage> pages(const FilteredComplex& c, int r_max);

// The stable page: computed at a drop past the whole filtration window, where
// every later differential leaves or enters a zero entry.
SpectralPage infinity_page(const FilteredComplex& c);

struct Cohomology {
    std::map<int, size_t> dims;           // dim H^n
    std::map<int, FilteredSpace> induced;  // filtration on H^n, in its own coordinates
};

Cohomology cohomology(const FilteredComplex& c);

// E_infinity dimensions against graded dimensions of the induced filtration
// on cohomology, everywhere.
bool convergence_check(const FilteredComplex& c);

// The decalage comparison: cohomology of gr^{Dec J}_w in degree a must match
// the second page of J at (w - a, a), both ways.
bool dec_e1_property_check(const FilteredComplex& c);

// Good truncation: full below n, kernel of d at n, zero above.  A subcomplex.
std::map<int, Subspace> good_truncation(const FilteredComplex& c, int n);

// The complex carried by a d-stable family of subspaces, with the induced
// differential and filtration written in the subspace bases.
FilteredComplex restrict_complex(const FilteredComplex& c, const std::map<int, Subspace>& sub);

}  // namespace hodge

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodgekit/dga.hpp"

namespace hodge {

/* Cosimplicial DGA on levels 0..L.  coface key (n, i), i = 0..n, is the
   algebra map level n-1 -> level n; codeg key (n, j), j = 0..n, is the map
   level n+1 -> level n.  Each map is a degreewise matrix family; absent
   degree keys are zero blocks (which the validator will reject unless both
   ends are zero, since algebra maps must preserve units). */
struct CosimplicialDga {
    std::vector<Dga> levels;
    std::map<std::pair<size_t, size_t>, std::map<int, Matrix>> coface;
    std::map<std::pair<size_t, size_t>, std::map<int, Matrix>> codeg;

    size_t top_level() const { return levels.empty() ? 0 : levels.size() - 1; }
    Matrix coface_at(size_t n, size_t i, int degree) const;
    Matrix codeg_at(size_t n, size_t j, int degree) const;
};

// The constant diagram on b: every level is b, every structure map identity.
CosimplicialDga constant_cosimplicial(const Dga& b, size_t levels);

struct CosimplicialCheck {
    bool ok = true;
    std::string failure;
};

/* Validates each level, every structure map as a map of unital DGAs, and
   the cosimplicial identities, within the stored level window. */
CosimplicialCheck validate_cosimplicial(const CosimplicialDga& c);

struct ThomWhitneyResult {
    Dga algebra;   // unweighted, degrees 0..top_degree
    // Dimensions unchanged when one level or one polynomial degree is
    // dropped; a false value means the caps are doing real truncation.
    bool stable = false;
};

/* Totalization by polynomial forms on simplices.  A degree-m element is a
   tuple (x_0, ..., x_L), x_n in (A_n (x) Omega(Delta^n))^m with polynomial
   degree at most poly_cap, matching under every coface and codegeneracy.
   Products that escape the polynomial cap raise an instability error. */
ThomWhitneyResult thom_whitney(const CosimplicialDga& c, int top_degree, size_t poly_cap);

}  // namespace hodge

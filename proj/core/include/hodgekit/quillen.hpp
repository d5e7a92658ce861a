#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hodgekit/dga.hpp"
#include "hodgekit/lie.hpp"

namespace hodge {

/* Free Lie model generated by the duals of A^n (n >= 1), one generator per
   basis vector, in chain degree n - 1.  The differential is dual to d plus
   dual to the product, extended as a derivation, and the whole object is
   truncated at a bracket-length cap (the pro-nilpotent quotient). */
struct LiePresentation {
    std::vector<int> gen_degrees;                    // chain degrees, >= 0
    std::vector<int> gen_weights;                    // empty when unweighted
    std::vector<std::pair<int, size_t>> gen_source;  // (algebra degree, basis index)
    size_t cap = 0;
    FreeLie lie;
    std::map<size_t, std::map<size_t, Scalar>> diff;  // sparse columns over lie.basis()
};

// Requires a valid algebra and cap >= 3: below that the square-zero check
// on the truncation is vacuous and ranks are meaningless.
LiePresentation quillen_G(const Dga& a, size_t bracket_cap);

struct PiReport {
    int n = 0;
    size_t rank = 0;                    // dim of the degree n - 1 homology at the cap
    std::map<int, size_t> weight_ranks; // nonzero pieces only; empty when unweighted
    bool stable = false;                // rank unchanged over the last three caps
    std::vector<std::pair<size_t, size_t>> cap_ranks;  // (cap, rank)
    size_t hurewicz_rank = 0;           // rank of the map into H_{n-1} of the abelianization
    size_t hn_dual_dim = 0;             // dim H^n of the input algebra
    bool self_bracket_trivial = false;  // all brackets of classes vanish in H_{2n-2}
    size_t self_bracket_rank = 0;
};

PiReport pi_n(const Dga& a, int n, size_t bracket_cap);

}  // namespace hodge

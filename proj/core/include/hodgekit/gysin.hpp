#pragma once

#include <map>
#include <utility>

#include "hodgekit/dga.hpp"

namespace hodge {

enum class WeightConvention { APlusB, APlus2B };

/* Stratum cohomology presented on a bigraded window: the (a, b) piece is the
   degree a - b cohomology of the b-th stratum, placed in algebra degree a.
   `gysin` holds the components (a, b) -> (a + 1, b - 1) of the differential,
   `products` the multiplication blocks (a, b) x (a', b') -> (a + a', b + b'). */
struct GysinInput {
    WeightConvention convention = WeightConvention::APlusB;
    std::map<std::pair<int, int>, size_t> dims;
    std::map<std::pair<int, int>, Matrix> gysin;
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Matrix> products;
};

/* Assemble the window into a weighted DGA: degree a, pieces ordered by
   ascending b, stored weight a + b (the grading the differential preserves;
   the a+2b convention is a relabel applied when reporting, never a second
   grading on the algebra).  Rejects inputs whose assembled differential or
   product violates the DGA laws, with the failing witness. */
Dga e2_builder(const GysinInput& g);

// Start offset of each (a, b) piece inside its degree, in builder order.
std::map<std::pair<int, int>, size_t> e2_offsets(const GysinInput& g);

/* Reported weight of a degree-n, stored-weight-w block under a convention.
   The stratum index is b = w - n; the a+2b flag shifts positive b by b. */
int convention_weight(WeightConvention c, int weight, int degree);

}  // namespace hodge

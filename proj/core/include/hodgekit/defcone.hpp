#pragma once

#include <string>
#include <vector>

#include "hodgekit/linalg.hpp"

namespace hodge {

/* Inputs for the quadratic deformation cone on H1 (+) H0R1: the component
   d2: H0R1 -> T1 of the differential and the g-valued bracket pairings, each
   premultiplied into a fixed basis of its target space.  Both slots have odd
   total degree, so the self-pairings must be symmetric under swapping the
   two arguments. */
struct DefConeInput {
    size_t h1 = 0;
    size_t h0r1 = 0;
    size_t h0_ad = 0;    // dim H0(Y, ad), the gauge directions
    Matrix d2;           // T1 x h0r1
    Matrix omega_omega;  // T1 x h1^2, columns p*h1 + q
    Matrix omega_eta;    // T2 x h1*h0r1
    Matrix eta_eta;      // T3 x h0r1^2
};

/* One polynomial system row group: residual = linear * x + sum of
   quadratic(r, i*N + j) x_i x_j over coordinates x = (omega, eta), N the
   tangent dimension. */
struct QuadraticEquation {
    std::string label;
    Matrix linear;
    Matrix quadratic;
};

struct DeformationCone {
    size_t tangent_dim = 0;  // dim H1 + dim H0R1, first-order deformations
    std::vector<QuadraticEquation> equations;
    std::string group_action;
    bool quadratic_trivial = false;  // every quadratic coefficient vanishes
    size_t linear_solution_dim = 0;  // solutions of the linear parts alone
};

DeformationCone deformation_cone(const DefConeInput& in);

std::vector<Scalar> evaluate(const DeformationCone& cone, const std::vector<Scalar>& point);

}  // namespace hodge

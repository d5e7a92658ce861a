#include "hodgekit/defcone.hpp"

#include "hodgekit/error.hpp"

namespace hodge {

namespace {

void check_symmetric(const Matrix& m, size_t n, const std::string& which) {
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < p; ++q)
                require(m(r, p * n + q) == m(r, q * n + p), ErrorKind::Reject,
                        "bracket not antisymmetric: " + which +
                            " disagrees under swapping its arguments");
}

}  // namespace

DeformationCone deformation_cone(const DefConeInput& in) {
    size_t n = in.h1 + in.h0r1;
    require(in.d2.cols() == in.h0r1, ErrorKind::Shape, "d2 must take eta coordinates");
    require(in.omega_omega.cols() == in.h1 * in.h1, ErrorKind::Shape,
            "[omega,omega] pairing has the wrong shape");
    require(in.omega_omega.rows() == in.d2.rows(), ErrorKind::Shape,
            "d2 and [omega,omega] must share a target");
    require(in.omega_eta.cols() == in.h1 * in.h0r1, ErrorKind::Shape,
            "[omega,eta] pairing has the wrong shape");
    require(in.eta_eta.cols() == in.h0r1 * in.h0r1, ErrorKind::Shape,
            "[eta,eta] pairing has the wrong shape");
    check_symmetric(in.omega_omega, in.h1, "[omega,omega]");
    check_symmetric(in.eta_eta, in.h0r1, "[eta,eta]");

    DeformationCone cone;
    cone.tangent_dim = n;
    Scalar half(mpq_class(1, 2));

    QuadraticEquation first;
    first.label = "d2(eta) + (1/2)[omega,omega] = 0";
    first.linear = Matrix(in.d2.rows(), n);
    first.quadratic = Matrix(in.d2.rows(), n * n);
    for (size_t r = 0; r < in.d2.rows(); ++r) {
        for (size_t j = 0; j < in.h0r1; ++j)
            first.linear(r, in.h1 + j) = in.d2(r, j);
        for (size_t p = 0; p < in.h1; ++p)
            for (size_t q = 0; q < in.h1; ++q)
                first.quadratic(r, p * n + q) = half * in.omega_omega(r, p * in.h1 + q);
    }
    cone.equations.push_back(std::move(first));

    QuadraticEquation second;
    second.label = "[omega,eta] = 0";
    second.linear = Matrix(in.omega_eta.rows(), n);
    second.quadratic = Matrix(in.omega_eta.rows(), n * n);
    for (size_t r = 0; r < in.omega_eta.rows(); ++r)
        for (size_t p = 0; p < in.h1; ++p)
            for (size_t q = 0; q < in.h0r1; ++q)
                second.quadratic(r, p * n + in.h1 + q) = in.omega_eta(r, p * in.h0r1 + q);
    cone.equations.push_back(std::move(second));

    QuadraticEquation third;
    third.label = "[eta,eta] = 0";
    third.linear = Matrix(in.eta_eta.rows(), n);
    third.quadratic = Matrix(in.eta_eta.rows(), n * n);
    for (size_t r = 0; r < in.eta_eta.rows(); ++r)
        for (size_t p = 0; p < in.h0r1; ++p)
            for (size_t q = 0; q < in.h0r1; ++q)
                third.quadratic(r, (in.h1 + p) * n + in.h1 + q) =
                    in.eta_eta(r, p * in.h0r1 + q);
    cone.equations.push_back(std::move(third));

    cone.quadratic_trivial = true;
    for (const QuadraticEquation& e : cone.equations)
        cone.quadratic_trivial = cone.quadratic_trivial && e.quadratic.is_zero();
    cone.linear_solution_dim = in.h1 + in.h0r1 - rref(in.d2).rank;
    cone.group_action = "quotient by the gauge action of exp(H0(Y, ad)), dimension " +
                        std::to_string(in.h0_ad);
    return cone;
}

std::vector<Scalar> evaluate(const DeformationCone& cone, const std::vector<Scalar>& point) {
    size_t n = cone.tangent_dim;
    require(point.size() == n, ErrorKind::Shape, "point has the wrong dimension");
    std::vector<Scalar> out;
    for (const QuadraticEquation& e : cone.equations) {
        std::vector<Scalar> res = e.linear * point;
        for (size_t r = 0; r < res.size(); ++r)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    res[r] += e.quadratic(r, i * n + j) * point[i] * point[j];
        out.insert(out.end(), res.begin(), res.end());
    }
    return out;
}

}  // namespace hodge

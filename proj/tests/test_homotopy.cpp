#include "hodgekit/quillen.hpp"

#include <vector>

#include "doctest.h"
#include "hodgekit/error.hpp"
#include "hodgekit/gysin.hpp"

using namespace hodge;

namespace {

// One acyclic pair in odd/even degrees, one closed odd class, products
// tying them together: d(u) = v, d(s) = r, uw = s, vw = r.
Dga mixed_parity() {
    Dga a;
    for (int n = 0; n <= 5; ++n)
        a.dims[n] = 1;
    a.diff[1] = Matrix::identity(1);
    a.diff[4] = Matrix::identity(1);
    Matrix one = Matrix::identity(1);
    Matrix minus = one;
    minus(0, 0) = Scalar(-1);
    a.products[{1, 3}] = one;
    a.products[{3, 1}] = minus;
    a.products[{2, 3}] = one;
    a.products[{3, 2}] = one;
    return a;
}

Dga sphere(int n) {
    Dga a;
    for (int m = 0; m <= n; ++m)
        a.dims[m] = m == 0 || m == n ? 1 : 0;
    return a;
}

Dga projective_plane() {
    Dga a;
    a.dims[0] = 1;
    a.dims[1] = 0;
    a.dims[2] = 1;
    a.dims[3] = 0;
    a.dims[4] = 1;
    a.products[{2, 2}] = Matrix::identity(1);
    return a;
}

GysinInput punctured_line() {
    GysinInput g;
    g.dims[{0, 0}] = 1;
    g.dims[{1, 1}] = 2;
    g.dims[{2, 0}] = 1;
    Matrix m(1, 2);
    m(0, 0) = Scalar(1);
    m(0, 1) = Scalar(-1);
    g.gysin[{1, 1}] = m;
    return g;
}

}  // namespace

TEST_CASE("the Lie differential squares to zero on a mixed-parity algebra") {
    Dga a = mixed_parity();
    REQUIRE(validate_dga(a).ok);
    LiePresentation p = quillen_G(a, 4);
    CHECK(p.gen_degrees == (std::vector<int>{0, 1, 2, 3, 4}));
    size_t n = p.lie.basis().size();
    Matrix d(n, n);
    for (const auto& [j, col] : p.diff)
        for (const auto& [i, c] : col)
            d(i, j) = c;
    CHECK((d * d).is_zero());
}

TEST_CASE("the two-sphere has exactly two rational homotopy groups") {
    Dga a = sphere(2);
    std::vector<size_t> expected{0, 1, 1, 0};
    for (int n = 1; n <= 4; ++n) {
        PiReport r = pi_n(a, n, 6);
        CHECK(r.n == n);
        CHECK(r.rank == expected[static_cast<size_t>(n - 1)]);
        CHECK(r.stable);
    }
    PiReport r2 = pi_n(a, 2, 6);
    CHECK(r2.hurewicz_rank == 1);
    CHECK(r2.hn_dual_dim == 1);
    CHECK(!r2.self_bracket_trivial);  // the Whitehead square generates pi_3
    CHECK(r2.self_bracket_rank == 1);
    PiReport r3 = pi_n(a, 3, 6);
    CHECK(r3.self_bracket_trivial);
}

TEST_CASE("the three-sphere is rationally a single odd generator") {
    Dga a = sphere(3);
    std::vector<size_t> expected{0, 0, 1, 0};
    for (int n = 1; n <= 4; ++n) {
        PiReport r = pi_n(a, n, 6);
        CHECK(r.rank == expected[static_cast<size_t>(n - 1)]);
        CHECK(r.stable);
    }
    PiReport r3 = pi_n(a, 3, 6);
    CHECK(r3.hurewicz_rank == 1);
    CHECK(r3.self_bracket_trivial);
    CHECK(r3.self_bracket_rank == 0);
}

TEST_CASE("a square in degree two kills the Whitehead bracket") {
    Dga a = projective_plane();
    REQUIRE(validate_dga(a).ok);
    PiReport r2 = pi_n(a, 2, 6);
    CHECK(r2.rank == 1);
    CHECK(r2.stable);
    CHECK(r2.self_bracket_trivial);
    PiReport r3 = pi_n(a, 3, 6);
    CHECK(r3.rank == 0);
    CHECK(r3.stable);
}

TEST_CASE("the ground field alone has no homotopy at all") {
    Dga a;
    a.dims[0] = 1;
    for (int n = 1; n <= 3; ++n) {
        PiReport r = pi_n(a, n, 4);
        CHECK(r.rank == 0);
        CHECK(r.stable);
    }
}

TEST_CASE("the punctured-line page has a single weight-two loop") {
    Dga a = e2_builder(punctured_line());
    PiReport r1 = pi_n(a, 1, 6);
    CHECK(r1.rank == 1);
    CHECK(r1.weight_ranks == (std::map<int, size_t>{{2, 1}}));
    CHECK(r1.stable);
    CHECK(r1.hurewicz_rank == 1);
    CHECK(r1.self_bracket_trivial);
    PiReport r2 = pi_n(a, 2, 6);
    CHECK(r2.rank == 0);
}

TEST_CASE("caps and malformed inputs are refused with the right kinds") {
    Dga a = sphere(2);
    try {
        pi_n(a, 2, 2);
        FAIL("expected an instability error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Instability);
    }
    Dga bad;
    bad.dims[0] = 2;
    try {
        pi_n(bad, 1, 6);
        FAIL("expected a rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Reject);
    }
    try {
        pi_n(a, 0, 6);
        FAIL("expected a shape error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Shape);
    }
}

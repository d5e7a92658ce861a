#include "hodgekit/dga.hpp"

#include <string>

#include "doctest.h"
#include "hodgekit/error.hpp"
#include "hodgekit/gysin.hpp"
#include "util.hpp"

using namespace hodge;
using testutil::Rng;

namespace {

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

TEST_CASE("the coordinate swap transposes simple tensors") {
    Rng rng(71);
    for (int t = 0; t < 10; ++t) {
        size_t dp = static_cast<size_t>(rng.pick(1, 4));
        size_t dq = static_cast<size_t>(rng.pick(1, 4));
        Matrix x = testutil::random_matrix(rng, dp, 1);
        Matrix y = testutil::random_matrix(rng, dq, 1);
        CHECK(kron_swap(dp, dq) * kron(x, y) == kron(y, x));
        CHECK(kron_swap(dq, dp) * kron_swap(dp, dq) ==
              Matrix::identity(dp * dq));
    }
}

TEST_CASE("the punctured-line page assembles into a valid weighted algebra") {
    Dga a = e2_builder(punctured_line());
    CHECK(validate_dga(a).ok);
    CHECK(a.dims == (std::map<int, size_t>{{0, 1}, {1, 2}, {2, 1}}));
    CHECK(a.weights.at(0) == std::vector<int>{0});
    CHECK(a.weights.at(1) == (std::vector<int>{2, 2}));
    CHECK(a.weights.at(2) == std::vector<int>{2});
    Matrix d1(1, 2);
    d1(0, 0) = Scalar(1);
    d1(0, 1) = Scalar(-1);
    CHECK(a.diff.at(1) == d1);

    std::map<int, size_t> h = dga_cohomology_dims(a);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 1);
    CHECK(h.at(2) == 0);
    auto hw = dga_cohomology_weight_dims(a);
    CHECK(hw.size() == 2);
    CHECK(hw.at(0) == (std::map<int, size_t>{{0, 1}}));
    CHECK(hw.at(1) == (std::map<int, size_t>{{2, 1}}));
}

TEST_CASE("piece offsets follow the stratum order within each degree") {
    GysinInput g;
    g.dims[{1, 0}] = 1;
    g.dims[{1, 1}] = 2;
    g.dims[{2, 1}] = 1;
    g.dims[{2, 2}] = 1;
    auto off = e2_offsets(g);
    CHECK(off.at({1, 0}) == 0);
    CHECK(off.at({1, 1}) == 1);
    CHECK(off.at({2, 1}) == 0);
    CHECK(off.at({2, 2}) == 1);
}

TEST_CASE("each algebra law failure names its witness") {
    SUBCASE("gap in the degree window") {
        Dga a;
        a.dims[0] = 1;
        a.dims[2] = 1;
        DgaCheck c = validate_dga(a);
        CHECK(!c.ok);
        CHECK(c.failure == "degree window has a gap before 2");
    }
    SUBCASE("d squared") {
        Dga a;
        a.dims[0] = 1;
        a.dims[1] = 1;
        a.dims[2] = 1;
        a.dims[3] = 1;
        a.diff[1] = Matrix::identity(1);
        a.diff[2] = Matrix::identity(1);
        DgaCheck c = validate_dga(a);
        CHECK(!c.ok);
        CHECK(c.failure == "d squared is nonzero leaving degree 1");
    }
    SUBCASE("Leibniz against the unit") {
        Dga a;
        a.dims[0] = 1;
        a.dims[1] = 1;
        a.diff[0] = Matrix::identity(1);  // d(1) != 0 breaks d(1*1) = 2*d(1)
        DgaCheck c = validate_dga(a);
        CHECK(!c.ok);
        CHECK(c.failure == "Leibniz fails at degrees (0,0)");
    }
    SUBCASE("odd square with the wrong symmetry") {
        Dga a;
        a.dims[0] = 1;
        a.dims[1] = 2;
        a.dims[2] = 1;
        Matrix mu(1, 4);
        mu(0, 0) = Scalar(1);  // x*x != 0 cannot be graded commutative
        a.products[{1, 1}] = mu;
        DgaCheck c = validate_dga(a);
        CHECK(!c.ok);
        CHECK(c.failure == "graded commutativity fails at degrees (1,1)");
    }
    SUBCASE("scaled unit action") {
        Dga a;
        a.dims[0] = 1;
        a.dims[1] = 1;
        Matrix mu = Matrix::identity(1);
        mu(0, 0) = Scalar(2);
        a.products[{0, 1}] = mu;
        DgaCheck c = validate_dga(a);
        CHECK(!c.ok);
        CHECK(c.failure == "unit does not act as identity on the left of degree 1");
    }
    SUBCASE("unit carrying weight") {
        Dga a = e2_builder(punctured_line());
        a.weights[0] = {1};
        DgaCheck c = validate_dga(a);
        CHECK(!c.ok);
        CHECK(c.failure == "unit must have weight 0");
    }
    SUBCASE("differential moving weight") {
        Dga a = e2_builder(punctured_line());
        a.weights[2] = {3};
        DgaCheck c = validate_dga(a);
        CHECK(!c.ok);
        CHECK(c.failure == "differential does not preserve weight at degree 1");
    }
    SUBCASE("product block of the wrong shape") {
        Dga a;
        a.dims[0] = 1;
        a.dims[1] = 2;
        a.dims[2] = 1;
        a.products[{1, 1}] = Matrix(1, 3);
        DgaCheck c = validate_dga(a);
        CHECK(!c.ok);
        CHECK(c.failure == "product has the wrong shape at degrees (1,1)");
    }
}

TEST_CASE("page assembly rejects windows outside the first quadrant") {
    GysinInput g = punctured_line();
    g.dims[{-1, 0}] = 1;
    try {
        e2_builder(g);
        FAIL("expected a rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Reject);
    }
}

TEST_CASE("page assembly rejects mis-shaped blocks") {
    GysinInput g = punctured_line();
    g.gysin[{1, 1}] = Matrix(2, 2);
    try {
        e2_builder(g);
        FAIL("expected a shape error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Shape);
    }
}

TEST_CASE("weight relabelling doubles only the positive stratum index") {
    CHECK(convention_weight(WeightConvention::APlusB, 2, 1) == 2);
    CHECK(convention_weight(WeightConvention::APlus2B, 2, 1) == 3);
    CHECK(convention_weight(WeightConvention::APlus2B, 2, 2) == 2);
    CHECK(convention_weight(WeightConvention::APlus2B, 0, 0) == 0);
    CHECK(convention_weight(WeightConvention::APlus2B, 4, 2) == 6);
    CHECK(convention_weight(WeightConvention::APlus2B, 1, 2) == 1);
}

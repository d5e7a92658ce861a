#include "hodgekit/spectral.hpp"

#include "doctest.h"
#include "hodgekit/error.hpp"
#include "util.hpp"

using namespace hodge;
using testutil::Rng;

namespace {

FilteredComplex two_step_example() {
    FilteredComplex c;
    c.dims[0] = 2;
    c.dims[1] = 1;
    Matrix d(1, 2);
    d(0, 0) = Scalar(1);
    c.diff[0] = d;
    std::map<int, Subspace> j0;
    j0.emplace(-1, Subspace::zero(2));
    j0.emplace(0, Subspace::span_vec(2, {{Scalar(1), Scalar(0)}}));
    j0.emplace(1, Subspace::full(2));
    c.filt[0] = FilteredSpace(2, Direction::Increasing, j0);
    std::map<int, Subspace> j1;
    j1.emplace(-1, Subspace::zero(1));
    j1.emplace(0, Subspace::full(1));
    c.filt[1] = FilteredSpace(1, Direction::Increasing, j1);
    return c;
}

}  // namespace

TEST_CASE("random complexes validate and their pages converge") {
    Rng rng(91);
    for (int t = 0; t < 25; ++t) {
        FilteredComplex c = testutil::random_filtered_complex(rng, 12);
        ComplexCheck chk = validate_complex(c);
        REQUIRE(chk.ok);
        CHECK(convergence_check(c));
    }
}

TEST_CASE("first page of the two-step example collapses onto cohomology") {
    FilteredComplex c = two_step_example();
    REQUIRE(validate_complex(c).ok);
    auto pgs = pages(c, 2);
    CHECK(pgs[0].dim_at(0, 0) == 1);
    CHECK(pgs[0].dim_at(1, 0) == 1);
    CHECK(pgs[0].dim_at(0, 1) == 1);
    CHECK(pgs[1].dim_at(0, 0) == 0);
    CHECK(pgs[1].dim_at(0, 1) == 0);
    CHECK(pgs[1].dim_at(1, 0) == 1);
    CHECK(pgs[2].total_dim() == 1);
    Cohomology h = cohomology(c);
    CHECK(h.dims.at(0) == 1);
    CHECK(h.dims.at(1) == 0);
}

TEST_CASE("page dimensions telescope through the ranks of the differentials") {
    Rng rng(92);
    for (int t = 0; t < 10; ++t) {
        FilteredComplex c = testutil::random_filtered_complex(rng, 14);
        auto pgs = pages(c, 4);
        for (size_t r = 0; r + 1 < pgs.size(); ++r) {
            size_t drop = 0;
            for (const auto& [sn, m] : pgs[r].d)
                drop += rref(m).rank;
            CHECK(pgs[r + 1].total_dim() == pgs[r].total_dim() - 2 * drop);
        }
    }
}

TEST_CASE("stable page equals graded cohomology everywhere") {
    Rng rng(93);
    for (int t = 0; t < 10; ++t) {
        FilteredComplex c = testutil::random_filtered_complex(rng, 12);
        SpectralPage inf = infinity_page(c);
        Cohomology h = cohomology(c);
        std::map<int, size_t> by_degree;
        for (const auto& [sn, d] : inf.dims)
            by_degree[sn.second] += d;
        for (const auto& [n, d] : h.dims)
            CHECK(by_degree.count(n) ? by_degree.at(n) == d : d == 0);
    }
}

TEST_CASE("shifting the filtration satisfies the first-page property") {
    Rng rng(94);
    for (int t = 0; t < 25; ++t) {
        FilteredComplex c = testutil::random_filtered_complex(rng, 12);
        FilteredComplex dec = decalage(c);
        REQUIRE(validate_complex(dec).ok);
        CHECK(dec_e1_property_check(c));
    }
}

TEST_CASE("good truncation is a subcomplex computing low cohomology") {
    Rng rng(95);
    for (int t = 0; t < 10; ++t) {
        FilteredComplex c = testutil::random_filtered_complex(rng, 12);
        int n = (c.nlo() + c.nhi()) / 2;
        auto sub = good_truncation(c, n);
        for (const auto& [m, s] : sub) {
            // stability under d
            Subspace img = apply(c.diff_at(m), s);
            if (sub.count(m + 1))
                CHECK(sub.at(m + 1).contains(img));
            else
                CHECK(img.dim() == 0);
        }
        FilteredComplex r = restrict_complex(c, sub);
        REQUIRE(validate_complex(r).ok);
        Cohomology hr = cohomology(r), hc = cohomology(c);
        for (int m = c.nlo(); m <= n; ++m) {
            size_t a = hr.dims.count(m) ? hr.dims.at(m) : 0;
            size_t b = hc.dims.count(m) ? hc.dims.at(m) : 0;
            CHECK(a == b);
        }
    }
}

TEST_CASE("a one-step filtration degenerates immediately") {
    Rng rng(96);
    for (int t = 0; t < 8; ++t) {
        FilteredComplex c = testutil::random_filtered_complex(rng, 10);
        FilteredComplex flat;
        flat.dims = c.dims;
        flat.diff = c.diff;
        for (const auto& [n, d] : c.dims)
            flat.filt[n] = trivial_filtration(d);
        REQUIRE(validate_complex(flat).ok);
        auto pgs = pages(flat, 2);
        CHECK(pgs[1].total_dim() == pgs[2].total_dim());
        Cohomology h = cohomology(flat);
        size_t total = 0;
        for (const auto& [n, d] : h.dims) total += d;
        CHECK(pgs[1].total_dim() == total);
    }
}

TEST_CASE("complexes with a non-filtered differential are rejected") {
    FilteredComplex c = two_step_example();
    // break the filtration: put d(e0) outside J_0 C^1 by shrinking that step
    std::map<int, Subspace> j1;
    j1.emplace(0, Subspace::zero(1));
    j1.emplace(1, Subspace::full(1));
    c.filt[1] = FilteredSpace(1, Direction::Increasing, j1);
    CHECK(!validate_complex(c).ok);
}

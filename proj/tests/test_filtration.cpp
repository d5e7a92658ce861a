#include "hodgekit/filtration.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "hodgekit/error.hpp"
#include "hodgekit/rees.hpp"
#include "util.hpp"

using namespace hodge;
using testutil::Rng;

namespace {

FilteredSpace random_flag(Rng& rng, size_t n, Direction dir, bool real = false) {
    // Nested random steps from zero to full over a window of length <= 4.
    std::map<int, Subspace> steps;
    int lo = rng.pick(-2, 1);
    Subspace cur = Subspace::zero(n);
    std::vector<Subspace> chain{cur};
    while (!cur.is_full()) {
        Matrix extra = testutil::random_matrix(rng, n, 1, real);
        cur = sum(cur, Subspace::span(n, extra));
        chain.push_back(cur);
    }
    if (dir == Direction::Decreasing)
        std::reverse(chain.begin(), chain.end());
    for (size_t k = 0; k < chain.size(); ++k)
        steps.emplace(lo + static_cast<int>(k), chain[k]);
    return FilteredSpace(n, dir, steps);
}

}  // namespace

TEST_CASE("saturation makes lookup total") {
    Rng rng(41);
    FilteredSpace f = random_flag(rng, 4, Direction::Increasing);
    CHECK(f.at(f.lo() - 10) == f.at(f.lo()));
    CHECK(f.at(f.hi() + 10) == f.at(f.hi()));
    FilteredSpace g = random_flag(rng, 4, Direction::Decreasing);
    CHECK(g.at(g.lo() - 5) == g.at(g.lo()));
    CHECK(g.at(g.hi() + 5) == g.at(g.hi()));
}

TEST_CASE("construction rejects non-nested steps") {
    std::map<int, Subspace> steps;
    steps.emplace(0, Subspace::span_vec(2, {{Scalar(1), Scalar(0)}}));
    steps.emplace(1, Subspace::span_vec(2, {{Scalar(0), Scalar(1)}}));
    CHECK_THROWS_AS(FilteredSpace(2, Direction::Increasing, steps), Error);
}

TEST_CASE("checks report exhaustive and hausdorff with witnesses") {
    Rng rng(42);
    FilteredSpace f = random_flag(rng, 3, Direction::Increasing);
    FiltrationCheck c = filtration_checks(f);
    CHECK(c.exhaustive);
    CHECK(c.hausdorff);

    std::map<int, Subspace> steps;
    steps.emplace(0, Subspace::span_vec(2, {{Scalar(1), Scalar(0)}}));
    FilteredSpace partial(2, Direction::Increasing, steps);
    FiltrationCheck p = filtration_checks(partial);
    CHECK(!p.exhaustive);  // saturates at a proper subspace upward
    CHECK(!p.hausdorff);   // and never reaches zero downward
}

TEST_CASE("graded dimensions sum to the ambient dimension on full flags") {
    Rng rng(43);
    for (int t = 0; t < 10; ++t) {
        FilteredSpace f = random_flag(rng, 5, t % 2 ? Direction::Increasing
                                                   : Direction::Decreasing);
        size_t total = 0;
        for (const auto& [r, d] : graded_dims(f))
            total += d;
        CHECK(total == 5);
    }
}

TEST_CASE("value equality ignores how the window is stored") {
    Subspace line = Subspace::span_vec(2, {{Scalar(1), Scalar(0)}});
    std::map<int, Subspace> a, b;
    a.emplace(-1, Subspace::zero(2));
    a.emplace(0, line);
    a.emplace(1, Subspace::full(2));
    b = a;
    b.emplace(2, Subspace::full(2));  // redundant stored step
    FilteredSpace fa(2, Direction::Increasing, a), fb(2, Direction::Increasing, b);
    CHECK(filtrations_equal(fa, fb));
    b[0] = Subspace::span_vec(2, {{Scalar(0), Scalar(1)}});
    CHECK(!filtrations_equal(fa, FilteredSpace(2, Direction::Increasing, b)));
}

TEST_CASE("conjugate filtration fixes real flags") {
    Rng rng(44);
    FilteredSpace f = random_flag(rng, 4, Direction::Decreasing, true);
    CHECK(f.is_real());
    CHECK(f.conj() == f);
    FilteredSpace g = random_flag(rng, 4, Direction::Decreasing);
    CHECK(filtrations_equal(g.conj().conj(), g));
}

TEST_CASE("shift relabels indices") {
    Rng rng(45);
    FilteredSpace f = random_flag(rng, 3, Direction::Decreasing);
    FilteredSpace s = f.shifted(2);
    for (int r = f.lo() - 2; r <= f.hi() + 2; ++r)
        CHECK(s.at(r) == f.at(r + 2));
}

TEST_CASE("dual and tensor interact with grading dimensions") {
    Rng rng(46);
    FilteredSpace f = random_flag(rng, 3, Direction::Decreasing);
    FilteredSpace d = dual_filtration(f);
    auto gf = graded_dims(f), gd = graded_dims(d);
    // gr^p of the dual matches gr^{-p} of the original
    for (const auto& [p, dim] : gf)
        CHECK(gd.at(-p) == dim);
    FilteredSpace g = random_flag(rng, 2, Direction::Decreasing);
    FilteredSpace t = tensor_filtration(f, g);
    CHECK(t.ambient() == 6);
    CHECK(filtration_checks(t).exhaustive);
    CHECK(filtration_checks(t).hausdorff);
}

TEST_CASE("rees module of a flag is flat with graded cokernels") {
    Rng rng(47);
    for (int t = 0; t < 10; ++t) {
        FilteredSpace f = random_flag(rng, 4, Direction::Increasing);
        ReesModule m = rees_single(f);
        CHECK(m.flat);
        auto g = graded_dims(f);
        size_t total = 0;
        for (const auto& [n, d] : m.gr_dim) {
            total += d;
            if (d > 0)
                CHECK(g.at(n) == d);
        }
        CHECK(total == 4);
    }
}

TEST_CASE("double rees pieces are intersections with the conjugate") {
    Rng rng(48);
    FilteredSpace f = random_flag(rng, 3, Direction::Decreasing);
    DoubleRees m = rees_double(f);
    CHECK(m.flat);
    for (int p = m.lo; p <= m.hi; ++p)
        for (int q = m.lo; q <= m.hi; ++q)
            CHECK(double_rees_piece(m, p, q) == intersect(f.at(p), f.conj().at(q)));
}

TEST_CASE("real pair points match the complex dimension of the stable sum") {
    Rng rng(49);
    FilteredSpace f = random_flag(rng, 3, Direction::Decreasing);
    DoubleRees m = rees_double(f);
    for (int p = m.lo; p <= m.hi; ++p)
        for (int q = m.lo; q <= m.hi; ++q) {
            Subspace s = sum(double_rees_piece(m, p, q), double_rees_piece(m, q, p));
            CHECK(real_pair_dim(m, p, q) == s.dim());
        }
}

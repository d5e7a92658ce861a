#include "hodgekit/hodge.hpp"

#include "doctest.h"
#include "hodgekit/error.hpp"
#include "hodgekit/splitting.hpp"
#include "util.hpp"

using namespace hodge;
using testutil::Rng;

namespace {

// Pure weight-n structure of rank 2 with types (n,0) and (0,n): F^0 = all,
// F^1 = ... = F^n = span(e0 + z e1), F^{n+1} = 0, for any z with im z != 0.
MixedHodge rank2_pure(int n, const Scalar& z) {
    MixedHodge m;
    m.dim = 2;
    std::map<int, Subspace> w;
    w.emplace(n - 1, Subspace::zero(2));
    w.emplace(n, Subspace::full(2));
    m.W = FilteredSpace(2, Direction::Increasing, w);
    std::map<int, Subspace> f;
    f.emplace(0, Subspace::full(2));
    // decreasing steps saturate upward, so storing the line at n covers 1..n
    f.emplace(n, Subspace::span_vec(2, {{Scalar(1), z}}));
    f.emplace(n + 1, Subspace::zero(2));
    m.F = FilteredSpace(2, Direction::Decreasing, f);
    return m;
}

}  // namespace

TEST_CASE("pure rank-2 structures validate for honestly complex lines") {
    MixedHodge m = rank2_pure(2, Scalar::i());
    MhsReport r = validate_mhs(m);
    CHECK(r.ok);
    CHECK(r.gr_dims.at(2) == 2);
    PureCheck p = validate_pure(2, m.F, 2);
    CHECK(p.ok);
    CHECK(p.hodge_numbers.at({2, 0}) == 1);
    CHECK(p.hodge_numbers.at({0, 2}) == 1);
}

TEST_CASE("a real line in degree one fails opposedness") {
    // F^1 real: F^1 + conj F^1 is a line, never everything.
    MixedHodge m = rank2_pure(1, Scalar(2));
    MhsReport r = validate_mhs(m);
    CHECK(!r.ok);
    CHECK(r.failure_class == "not-opposed");
}

TEST_CASE("weight filtration must be real") {
    MixedHodge m = rank2_pure(2, Scalar::i());
    std::map<int, Subspace> w;
    w.emplace(1, Subspace::span_vec(2, {{Scalar(1), Scalar::i()}}));
    w.emplace(2, Subspace::full(2));
    m.W = FilteredSpace(2, Direction::Increasing, w);
    MhsReport r = validate_mhs(m);
    CHECK(!r.ok);
    CHECK(r.failure_class == "not-real");
}

TEST_CASE("non-exhaustive hodge filtration is reported as such") {
    MixedHodge m = rank2_pure(2, Scalar::i());
    std::map<int, Subspace> f;
    f.emplace(1, Subspace::span_vec(2, {{Scalar(1), Scalar::i()}}));
    f.emplace(3, Subspace::zero(2));
    m.F = FilteredSpace(2, Direction::Decreasing, f);
    MhsReport r = validate_mhs(m);
    CHECK(!r.ok);
    CHECK(r.failure_class == "not-exhaustive");
}

TEST_CASE("tate twist shifts weights by minus twice n") {
    MixedHodge m = rank2_pure(2, Scalar::i());
    MixedHodge t = tate_twist(m, 1);
    MhsReport r = validate_mhs(t);
    CHECK(r.ok);
    CHECK(r.gr_dims.count(0));
    CHECK(r.gr_dims.at(0) == 2);
    MixedHodge q = tate_object(3);
    MhsReport rq = validate_mhs(q);
    CHECK(rq.ok);
    CHECK(rq.gr_dims.at(-6) == 1);
}

TEST_CASE("tensor dual and hom act on weights additively") {
    MixedHodge a = tate_object(1), b = tate_object(-2);
    MhsReport t = validate_mhs(tensor_mhs(a, b));
    CHECK(t.ok);
    CHECK(t.gr_dims.at(2) == 1);  // -2 + 4
    MhsReport d = validate_mhs(dual_mhs(a));
    CHECK(d.ok);
    CHECK(d.gr_dims.at(2) == 1);
    MhsReport h = validate_mhs(hom_mhs(a, b));
    CHECK(h.ok);
    CHECK(h.gr_dims.at(6) == 1);
    CHECK(validate_mhs(dual_mhs(dual_mhs(b))).gr_dims == validate_mhs(b).gr_dims);
}

TEST_CASE("bigraded decomposition bookkeeping") {
    Rng rng(61);
    for (int t = 0; t < 10; ++t) {
        BigradedSpace g = testutil::random_bigrading(rng, 6);
        CHECK(g.is_conj_symmetric());
        size_t total = 0;
        for (const auto& [pq, s] : g.pieces())
            total += s.dim();
        CHECK(total == 6);
        CHECK(g.block_basis() * g.block_basis_inv() == Matrix::identity(6));
        // weight spaces are conj-stable with real models
        for (const auto& [m, s] : g.weight_spaces_real())
            CHECK(s.is_real());
        FiltrationCheck wc = filtration_checks(g.weight_filtration());
        CHECK(wc.exhaustive);
        CHECK(wc.hausdorff);
        CHECK(g.weight_filtration().is_real());
    }
}

TEST_CASE("weight grading collapse of a bigrading") {
    Rng rng(62);
    BigradedSpace g = testutil::random_bigrading(rng, 5);
    WeightGradedSpace w = weight_graded(g);
    for (const auto& [m, s] : w.pieces())
        CHECK(s == real_points(g.weight_space(m)));
    MtsReport rep = mts_report(w);
    CHECK(rep.graded_total_ok);
    CHECK(rep.dim == 5);
}

TEST_CASE("canonical bigrading of a mixed structure recovers the filtrations") {
    Rng rng(63);
    for (int t = 0; t < 10; ++t) {
        SplitHodge s = testutil::random_shs(rng, 6);
        MixedHodge m = shs_to_mhs(s);
        BigradedSpace g = deligne_bigrading(m);
        // W_m is the sum of pieces with p+q <= m; the individual weight rows
        // of the canonical grading need not be conjugation-stable, the sums are.
        for (int mm = g.wlo() - 1; mm <= g.whi(); ++mm) {
            Subspace acc = Subspace::zero(g.dim());
            for (const auto& [pq, piece] : g.pieces())
                if (pq.first + pq.second <= mm)
                    acc = sum(acc, piece);
            CHECK(acc == m.W.at(mm));
        }
        // F is recovered as partial sums of the bigrading
        FilteredSpace f = g.split_hodge_filtration();
        CHECK(filtrations_equal(f, m.F));
        // the pieces refine gr^W: dims match the split grading
        for (const auto& [pq, piece] : s.grading.pieces())
            CHECK(g.piece(pq.first, pq.second).dim() == piece.dim());
    }
}

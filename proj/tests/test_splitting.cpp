#include "hodgekit/splitting.hpp"

#include "doctest.h"
#include "hodgekit/error.hpp"
#include "util.hpp"

using namespace hodge;
using testutil::Rng;

TEST_CASE("integral pairing pinned values") {
    CHECK(integral_pairing(0, 0, Endpoints::ZeroToI) == Scalar::i());
    CHECK(integral_pairing(0, 0, Endpoints::MinusIToI) == Scalar(mpq_class(0), mpq_class(2)));
    CHECK(integral_pairing(1, 0, Endpoints::MinusIToI) == Scalar(2));
    CHECK(integral_pairing(0, 1, Endpoints::MinusIToI) == Scalar(-2));
    CHECK(integral_pairing(1, 1, Endpoints::MinusIToI) ==
          Scalar(mpq_class(0), mpq_class(4, 3)));
}

TEST_CASE("pairing over the symmetric interval conjugates to its negated swap") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            Scalar v = integral_pairing(a, b, Endpoints::MinusIToI);
            CHECK(!v.is_zero());
            CHECK(v.conj() == -integral_pairing(b, a, Endpoints::MinusIToI));
        }
}

TEST_CASE("random split structures validate") {
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        SplitHodge s = testutil::random_shs(rng, 7);
        SplitCheck c = validate_shs(s);
        CHECK(c.ok);
        if (!c.ok)
            MESSAGE(c.failure);
    }
}

TEST_CASE("reality violations are caught") {
    std::map<std::pair<int, int>, Subspace> pieces;
    pieces[{0, 0}] = Subspace::span_vec(3, {{Scalar(1), Scalar(0), Scalar(0)}});
    pieces[{-1, -2}] = Subspace::span_vec(3, {{Scalar(0), Scalar(1), Scalar::i()}});
    pieces[{-2, -1}] = Subspace::span_vec(3, {{Scalar(0), Scalar(1), -Scalar::i()}});
    SplitHodge s;
    s.grading = BigradedSpace(3, pieces);
    Matrix b01(3, 3);
    b01(1, 0) = Scalar(1);
    b01(2, 0) = Scalar::i();
    s.beta[{0, 1}] = b01;
    s.beta[{1, 0}] = b01.conj();
    REQUIRE(validate_shs(s).ok);
    s.beta[{1, 0}] = s.beta[{1, 0}] * Scalar(3);
    CHECK(!validate_shs(s).ok);
}

TEST_CASE("typed components reassemble the map") {
    Rng rng(73);
    BigradedSpace g = testutil::random_bigrading(rng, 6);
    Matrix m = testutil::random_matrix(rng, 6, 6);
    auto comps = typed_components(g, m);
    Matrix total(6, 6);
    for (const auto& [shift, part] : comps)
        total += part;
    CHECK(total == m);
}

TEST_CASE("split to mixed lands on valid structures with matching graded data") {
    Rng rng(74);
    for (int t = 0; t < 20; ++t) {
        SplitHodge s = testutil::random_shs(rng, 7);
        MixedHodge m = shs_to_mhs(s);
        MhsReport r = validate_mhs(m);
        REQUIRE(r.ok);
        std::map<int, size_t> split_gr;
        for (const auto& [pq, sub] : s.grading.pieces())
            split_gr[pq.first + pq.second] += sub.dim();
        CHECK(r.gr_dims == split_gr);
    }
}

TEST_CASE("split and unipotent encodings are inverse equivalences") {
    Rng rng(75);
    for (int t = 0; t < 30; ++t) {
        SplitHodge s = testutil::random_shs(rng, 7);
        FRep f = shs_to_frep(s);
        CHECK(validate_frep(f).ok);
        CHECK(f.d.conj() * f.d == Matrix::identity(s.grading.dim()));
        SplitHodge back = frep_to_shs(f);
        CHECK(back == s);
    }
}

TEST_CASE("mixed to split recovers the unique splitting") {
    Rng rng(76);
    for (int t = 0; t < 20; ++t) {
        SplitHodge s = testutil::random_shs(rng, 6);
        ShsFromMhs out = mhs_to_shs(shs_to_mhs(s));
        CHECK(out.shs == s);
        CHECK(out.phi == Matrix::identity(s.grading.dim()));
    }
}

TEST_CASE("mixed structures off the canonical image still split") {
    Rng rng(77);
    for (int t = 0; t < 15; ++t) {
        SplitHodge s = testutil::random_shs(rng, 6);
        MixedHodge m = shs_to_mhs(s);
        Matrix l = testutil::random_weight_lowering(rng, s.grading);
        Matrix u = nilpotent_exp(l);
        MixedHodge moved;
        moved.dim = m.dim;
        moved.W = m.W;
        moved.F = testutil::apply_filtration(u, m.F);
        REQUIRE(validate_mhs(moved).ok);
        ShsFromMhs out = mhs_to_shs(moved);
        MixedHodge round = shs_to_mhs(out.shs);
        CHECK(filtrations_equal(testutil::apply_filtration(out.phi, round.W), moved.W));
        CHECK(filtrations_equal(testutil::apply_filtration(out.phi, round.F), moved.F));
    }
}

TEST_CASE("kummer family produces the expected line and operator") {
    for (const char* text : {"1", "-2", "7/3"}) {
        Scalar c = Scalar::parse(text);
        std::map<std::pair<int, int>, Subspace> pieces;
        pieces[{0, 0}] = Subspace::span_vec(2, {{Scalar(1), Scalar(0)}});
        pieces[{-1, -1}] = Subspace::span_vec(2, {{Scalar(0), Scalar(1)}});
        SplitHodge s;
        s.grading = BigradedSpace(2, pieces);
        Matrix e(2, 2);
        e(1, 0) = c;
        s.beta[{0, 0}] = e;
        REQUIRE(validate_shs(s).ok);
        MixedHodge m = shs_to_mhs(s);
        CHECK(m.F.at(0) == Subspace::span_vec(2, {{Scalar(1), Scalar::i() * c}}));
        FRep f = shs_to_frep(s);
        Matrix expect = Matrix::identity(2);
        expect(1, 0) = Scalar(mpq_class(0), mpq_class(2)) * c;
        CHECK(f.d == expect);
    }
}

TEST_CASE("frep conversion rejects operators with components off the strict range") {
    // d - id raising the first index: not expressible by any beta family.
    std::map<std::pair<int, int>, Subspace> pieces;
    pieces[{0, 0}] = Subspace::span_vec(2, {{Scalar(1), Scalar(0)}});
    pieces[{-1, -1}] = Subspace::span_vec(2, {{Scalar(0), Scalar(1)}});
    FRep f;
    f.grading = BigradedSpace(2, pieces);
    f.d = Matrix::identity(2);
    f.d(0, 1) = Scalar::i();  // raises (p,q)
    CHECK_THROWS_AS(frep_to_shs(f), Error);
}

TEST_CASE("tensor dual and sum preserve validity") {
    Rng rng(78);
    SplitHodge a = testutil::random_shs(rng, 4);
    SplitHodge b = testutil::random_shs(rng, 3);
    CHECK(validate_shs(tensor_shs(a, b)).ok);
    CHECK(validate_shs(dual_shs(a)).ok);
    CHECK(validate_shs(direct_sum_shs(a, b)).ok);
    CHECK(tensor_shs(a, b).grading.dim() == a.grading.dim() * b.grading.dim());
    SplitHodge dd = dual_shs(dual_shs(a));
    CHECK(dd.grading == a.grading);
}

TEST_CASE("hom and ext dimensions satisfy the four-term bookkeeping") {
    Rng rng(79);
    for (int t = 0; t < 10; ++t) {
        SplitHodge a = testutil::random_shs(rng, 4);
        SplitHodge b = testutil::random_shs(rng, 4);
        HomExt he = hom_ext_shs(a, b);
        CHECK(he.graded_hom_dim - he.hom_dim == he.target_dim - he.ext1_dim);
        CHECK(he.hom_basis.size() == he.hom_dim);
        CHECK(he.ext1_basis.size() == he.ext1_dim);
    }
}

TEST_CASE("hom elements intertwine the splittings") {
    Rng rng(80);
    SplitHodge a = testutil::random_shs(rng, 4);
    HomExt he = hom_ext_shs(a, a);
    CHECK(he.hom_dim >= 1);  // identity at least
    for (const Matrix& f : he.hom_basis)
        for (const auto& [ab, beta] : a.beta)
            CHECK(beta * f == f * beta);
}

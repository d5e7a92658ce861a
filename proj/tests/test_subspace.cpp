#include "hodgekit/subspace.hpp"

#include "doctest.h"
#include "util.hpp"

using namespace hodge;
using testutil::Rng;
using testutil::random_matrix;

namespace {

Subspace random_subspace(Rng& rng, size_t ambient) {
    return Subspace::span(ambient, random_matrix(rng, ambient, rng.pick(0, ambient)));
}

}  // namespace

TEST_CASE("canonical form makes equality representation-free") {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        Matrix gens = random_matrix(rng, 5, rng.pick(1, 4));
        Subspace s = Subspace::span(5, gens);
        // respan by random invertible combinations of the generators
        Matrix mix = random_matrix(rng, gens.cols(), gens.cols());
        while (rref(mix).rank < gens.cols())
            mix = random_matrix(rng, gens.cols(), gens.cols());
        CHECK(Subspace::span(5, gens * mix) == s);
        for (size_t j = 0; j < gens.cols(); ++j)
            CHECK(s.contains(gens.col_vec(j)));
    }
}

TEST_CASE("modular law bookkeeping of sum and intersection") {
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        size_t n = 6;
        Subspace a = random_subspace(rng, n), b = random_subspace(rng, n);
        Subspace s = sum(a, b), i = intersect(a, b);
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    }
}

TEST_CASE("image and kernel match the rank theorem") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        Matrix f = random_matrix(rng, rng.pick(1, 5), rng.pick(1, 5));
        CHECK(image(f).dim() + kernel(f).dim() == f.cols());
        CHECK(image(f).dim() == rref(f).rank);
    }
}

TEST_CASE("preimage of the image recovers everything modulo kernel") {
    Rng rng(24);
    Matrix f = random_matrix(rng, 4, 5);
    Subspace w = random_subspace(rng, 4);
    Subspace pre = preimage(f, w);
    CHECK(pre.contains(kernel(f)));
    CHECK(w.contains(apply(f, pre)) );
    CHECK(preimage(f, image(f)) == Subspace::full(5));
}

TEST_CASE("quotient projection and section are mutually inverse on the quotient") {
    Rng rng(25);
    for (int t = 0; t < 15; ++t) {
        size_t n = 6;
        Subspace u = random_subspace(rng, n);
        Quotient q = quotient(u);
        CHECK(q.dim == n - u.dim());
        CHECK((q.projection * u.basis()).is_zero());
        CHECK(q.projection * q.section == Matrix::identity(q.dim));
    }
}

TEST_CASE("relative quotient lives inside the bigger space") {
    Rng rng(26);
    size_t n = 6;
    Subspace u = random_subspace(rng, n);
    Subspace w = sum(u, random_subspace(rng, n));
    Quotient q = quotient(w, u);
    CHECK(q.dim == w.dim() - u.dim());
    CHECK((q.projection * u.basis()).is_zero());
    CHECK(q.projection * q.section == Matrix::identity(q.dim));
}

TEST_CASE("annihilator is an involution with complementary dimension") {
    Rng rng(27);
    for (int t = 0; t < 15; ++t) {
        size_t n = 5;
        Subspace s = random_subspace(rng, n);
        Subspace ann = annihilator(s);
        CHECK(ann.dim() == n - s.dim());
        CHECK(annihilator(ann) == s);
    }
}

TEST_CASE("real points of a conjugation-stable space have the same dimension") {
    Rng rng(28);
    for (int t = 0; t < 15; ++t) {
        size_t n = 6;
        Subspace s = random_subspace(rng, n);
        Subspace stable = sum(s, s.conj());
        Subspace re = real_points(stable);
        CHECK(re.is_real());
        CHECK(re.dim() == stable.dim());
        CHECK(stable.contains(re));
    }
}

TEST_CASE("restricting a map to a stable subspace commutes with application") {
    Rng rng(29);
    size_t n = 5;
    Matrix f = random_matrix(rng, n, n);
    Subspace dom = random_subspace(rng, n);
    Subspace cod = apply(f, dom);
    Matrix r = restrict_map(f, dom, cod);
    CHECK(f * dom.basis() == cod.basis() * r);
}

TEST_CASE("tensor of subspaces multiplies dimensions") {
    Rng rng(30);
    Subspace a = random_subspace(rng, 3), b = random_subspace(rng, 4);
    Subspace t = tensor_pair(a, b);
    CHECK(t.ambient() == 12);
    CHECK(t.dim() == a.dim() * b.dim());
}

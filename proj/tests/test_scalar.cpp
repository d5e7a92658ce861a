#include "hodgekit/scalar.hpp"

#include "doctest.h"
#include "hodgekit/error.hpp"

using namespace hodge;

TEST_CASE("field arithmetic and conjugation") {
    Scalar a(mpq_class(2, 3), mpq_class(-1, 2));
    Scalar b(mpq_class(-5), mpq_class(1, 3));
    CHECK(a + b == Scalar(mpq_class(-13, 3), mpq_class(-1, 6)));
    CHECK(a * b - b * a == Scalar(0));
    CHECK(a * a.inverse() == Scalar(1));
    CHECK((a / b) * b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    // i^2 = -1
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("conjugation fixes exactly the real line") {
    Scalar r(mpq_class(7, 5));
    CHECK(r.conj() == r);
    CHECK(r.is_real());
    Scalar z(mpq_class(0), mpq_class(1, 9));
    CHECK(z.conj() == -z);
    CHECK(!z.is_real());
}

TEST_CASE("norm through conjugation") {
    Scalar z(mpq_class(3, 4), mpq_class(-2, 7));
    Scalar n = z * z.conj();
    CHECK(n.is_real());
    CHECK(n == Scalar(mpq_class(3, 4) * mpq_class(3, 4) + mpq_class(2, 7) * mpq_class(2, 7)));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
}

TEST_CASE("text round trip is canonical") {
    for (const char* text : {"0", "1", "-2/3", "5/7+1/2*i", "-1/3-4*i", "0+1*i", "3"}) {
        Scalar s = Scalar::parse(text);
        CHECK(Scalar::parse(s.str()) == s);
    }
    CHECK(Scalar::parse("1*i") == Scalar::i());
    CHECK(Scalar::parse("-2/4") == Scalar(mpq_class(-1, 2)));
    CHECK(Scalar(mpq_class(1, 2), mpq_class(-3)).str() == "1/2-3*i");
    CHECK(Scalar(0).str() == "0");
}

TEST_CASE("malformed text is rejected") {
    for (const char* text : {"", "x", "1/0", "2//3", "1+", "i*i"})
        CHECK_THROWS_AS(Scalar::parse(text), Error);
}

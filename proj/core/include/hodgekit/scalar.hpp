#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace hodge {

/* Exact scalar: a rational number with an optional Gaussian part,
   x = re + im*i, both components arbitrary-precision rationals.

   Components are kept in canonical form (reduced fraction, positive
   denominator).  conj() negates the imaginary part and is an involution
   whose fixed points are exactly the scalars with im == 0; is_real()
   tests that.  Division by zero throws ErrorKind::Shape. */
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const mpq_class& re) : re_(re), im_(0) { canonicalize_(); }
    Scalar(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) { canonicalize_(); }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    // Accepts "a/b" or "a/b+c/d*i" (denominators optional when 1, the
    // middle sign may be '-', a bare "c/d*i" is also tolerated).
    static Scalar parse(const std::string& text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    Scalar conj() const { return Scalar(re_, mpq_class(-im_)); }

    Scalar operator-() const { return Scalar(mpq_class(-re_), mpq_class(-im_)); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    // Canonical text form, inverse to parse().
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    void canonicalize_() { re_.canonicalize(); im_.canonicalize(); }

    mpq_class re_, im_;
};

}  // namespace hodge

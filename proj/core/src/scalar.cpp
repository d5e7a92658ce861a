#include "hodgekit/scalar.hpp"

#include <ostream>

#include "hodgekit/error.hpp"

namespace hodge {

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    im_ = im;
    return *this;
}

Scalar Scalar::inverse() const {
    mpq_class n = re_ * re_ + im_ * im_;  // |x|^2, zero iff x == 0
    require(n != 0, ErrorKind::Shape, "division by zero scalar");
    return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    *this *= o.inverse();
    return *this;
}

namespace {

mpq_class parse_rational(const std::string& text) {
    if (text.empty())
        fail(ErrorKind::Parse, "empty rational literal");
    for (size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (k == 0 && (c == '-' || c == '+'));
        if (!ok)
            fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
    if (q.get_den() == 0)
        fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    std::string s = text;
    if (s.empty())
        fail(ErrorKind::Parse, "empty scalar literal");

    // Locate the sign that separates the real and imaginary summands: any
    // '+'/'-' past position 0 whose predecessor is a digit.
    size_t split = std::string::npos;
    for (size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] >= '0' && s[k - 1] <= '9')
            split = k;
    }

    bool has_i = s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0;
    if (!has_i) {
        if (split != std::string::npos)
            fail(ErrorKind::Parse, "bad scalar literal '" + text + "'");
        return Scalar(parse_rational(s));
    }

    std::string imag = s.substr(0, s.size() - 2);
    std::string real = "0";
    if (split != std::string::npos) {
        real = s.substr(0, split);
        imag = s.substr(split, s.size() - 2 - split);
        if (imag.size() >= 1 && imag[0] == '+')
            imag = imag.substr(1);
    }
    if (imag.empty() || imag == "-")
        imag += "1";
    return Scalar(parse_rational(real), parse_rational(imag));
}

std::string Scalar::str() const {
    if (im_ == 0)
        return re_.get_str();
    std::string out = re_.get_str();
    if (im_ > 0)
        out += "+";
    out += im_.get_str();
    out += "*i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace hodge

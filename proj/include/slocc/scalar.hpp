#ifndef SLOCC_SCALAR_HPP
#define SLOCC_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace slocc {

// Gaussian rational re + im*i.  mpq_class keeps both parts in lowest terms.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(mpq_class re) : re_(std::move(re)) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar frac(long num, long den);
    static Scalar i() { return Scalar(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    // lexicographic on (re, im)
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    // "p/q", "a+bi", "i", "-3/2i", "1/2-i/3" is not accepted; imaginary part is "<rational>i"
    static Scalar parse(const std::string& text);
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar pow(const Scalar& s, long e);

// rational literal "p", "p/q", "-p/q"; throws ParseError on malformed or zero denominator
mpq_class parse_rational(const std::string& text);
std::string rational_str(const mpq_class& q);

} // namespace slocc

#endif

#include "slocc/scalar.hpp"

#include "slocc/errors.hpp"

#include <cctype>
#include <sstream>

namespace slocc {

Scalar Scalar::frac(long num, long den)
{
    if (den == 0)
        throw InvalidArgument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::inv() const
{
    if (is_zero())
        throw SingularMatrix("division by zero scalar");
    mpq_class n = norm2();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    if (sgn(o.im_) != 0)
        im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    if (sgn(o.im_) != 0)
        im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw SingularMatrix("division by zero scalar");
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inv();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    int c = cmp(a.re_, b.re_);
    if (c == 0)
        c = cmp(a.im_, b.im_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Scalar pow(const Scalar& s, long e)
{
    if (e < 0)
        return pow(s.inv(), -e);
    Scalar r(1), b = s;
    while (e) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

static bool all_digits(const std::string& s, size_t from, size_t to)
{
    if (from >= to)
        return false;
    for (size_t k = from; k < to; ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            return false;
    return true;
}

mpq_class parse_rational(const std::string& text)
{
    size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        start = 1;
    size_t slash = text.find('/');
    size_t end_num = slash == std::string::npos ? text.size() : slash;
    if (!all_digits(text, start, end_num))
        throw ParseError("malformed rational '" + text + "'");
    mpz_class num(text.substr(start, end_num - start));
    if (text[0] == '-')
        num = -num;
    mpz_class den = 1;
    if (slash != std::string::npos) {
        if (!all_digits(text, slash + 1, text.size()))
            throw ParseError("malformed rational '" + text + "'");
        den = mpz_class(text.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + text + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q)
{
    return q.get_str();
}

Scalar Scalar::parse(const std::string& raw)
{
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            text += c;
    if (text.empty())
        throw ParseError("empty scalar literal");
    if (text.back() != 'i')
        return Scalar(parse_rational(text));

    std::string body = text.substr(0, text.size() - 1);
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
    std::string im_part = split == std::string::npos ? body : body.substr(split);
    mpq_class im;
    if (im_part.empty() || im_part == "+")
        im = 1;
    else if (im_part == "-")
        im = -1;
    else
        im = parse_rational(im_part);
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part);
    return Scalar(re, im);
}

std::string Scalar::str() const
{
    if (sgn(im_) == 0)
        return re_.get_str();
    std::string im;
    if (im_ == 1)
        im = "i";
    else if (im_ == -1)
        im = "-i";
    else
        im = im_.get_str() + "i";
    if (sgn(re_) == 0)
        return im;
    if (im[0] != '-')
        im = "+" + im;
    return re_.get_str() + im;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

} // namespace slocc

#include "slocc/poly.hpp"

#include "slocc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace slocc {

Poly::Poly(std::vector<Scalar> c) : c_(std::move(c))
{
    trim();
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Scalar Poly::operator()(const Scalar& x) const
{
    Scalar r;
    for (size_t k = c_.size(); k-- > 0;)
        r = r * x + c_[k];
    return r;
}

Poly Poly::derivative() const
{
    std::vector<Scalar> d;
    for (size_t k = 1; k < c_.size(); ++k)
        d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return Poly(std::move(d));
}

Poly Poly::monic() const
{
    if (c_.empty())
        return *this;
    Scalar inv = c_.back().inv();
    std::vector<Scalar> d = c_;
    for (auto& x : d)
        x *= inv;
    return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b)
{
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b)
{
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(k) - b.coeff(k);
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

std::string Poly::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        bool unit = c_[k].is_one() && k > 0;
        if (!unit)
            os << "(" << c_[k] << ")";
        if (k > 0)
            os << (unit ? "" : "*") << "x" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw InvalidArgument("polynomial division by zero");
    std::vector<Scalar> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db)
        return {Poly(), a};
    std::vector<Scalar> q(a.degree() - db + 1);
    Scalar inv = b.lead().inv();
    for (int k = a.degree() - db; k >= 0; --k) {
        Scalar f = r[k + db] * inv;
        q[k] = f;
        if (f.is_zero())
            continue;
        for (int j = 0; j <= db; ++j)
            r[k + j] -= f * b.coeffs()[j];
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly squarefree_part(const Poly& p)
{
    if (p.degree() <= 0)
        return p.monic();
    Poly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

namespace {

struct Cf {
    mpf_class re, im;
};

// every result carries the operand precision; gmpxx temporaries would otherwise
// fall back to the global default
Cf operator+(const Cf& a, const Cf& b)
{
    auto p = a.re.get_prec();
    return {mpf_class(a.re + b.re, p), mpf_class(a.im + b.im, p)};
}
Cf operator-(const Cf& a, const Cf& b)
{
    auto p = a.re.get_prec();
    return {mpf_class(a.re - b.re, p), mpf_class(a.im - b.im, p)};
}
Cf operator*(const Cf& a, const Cf& b)
{
    auto p = a.re.get_prec();
    mpf_class rr(a.re * b.re, p), ii(a.im * b.im, p), ri(a.re * b.im, p), ir(a.im * b.re, p);
    return {mpf_class(rr - ii, p), mpf_class(ri + ir, p)};
}
Cf operator/(const Cf& a, const Cf& b)
{
    auto p = a.re.get_prec();
    mpf_class d(b.re * b.re, p), t(b.im * b.im, p);
    d += t;
    mpf_class x1(a.re * b.re, p), x2(a.im * b.im, p), y1(a.im * b.re, p), y2(a.re * b.im, p);
    x1 += x2;
    y1 -= y2;
    x1 /= d;
    y1 /= d;
    return {x1, y1};
}
mpf_class cabs(const Cf& a)
{
    auto p = a.re.get_prec();
    mpf_class s(a.re * a.re, p), t(a.im * a.im, p);
    s += t;
    return mpf_class(sqrt(s), p);
}

mpz_class round_mpf(const mpf_class& x)
{
    mpf_class h(x, x.get_prec());
    h += 0.5;
    mpf_floor(h.get_mpf_t(), h.get_mpf_t());
    return mpz_class(h);
}

// integer-scaled copy of p: every coefficient in Z[i]
std::vector<std::pair<mpz_class, mpz_class>> integer_scaled(const Poly& p)
{
    mpz_class l = 1;
    for (auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    std::vector<std::pair<mpz_class, mpz_class>> out;
    for (auto& c : p.coeffs()) {
        mpq_class re = c.re() * l, im = c.im() * l;
        out.emplace_back(re.get_num(), im.get_num());
    }
    return out;
}

// simultaneous approximation of all roots (Aberth-Ehrlich)
std::vector<Cf> approximate_roots(const std::vector<std::pair<mpz_class, mpz_class>>& g)
{
    int d = static_cast<int>(g.size()) - 1;
    size_t bits = 0;
    for (auto& [re, im] : g)
        bits = std::max({bits, mpz_sizeinbase(re.get_mpz_t(), 2), mpz_sizeinbase(im.get_mpz_t(), 2)});
    mp_bitcnt_t prec = 128 + 2 * bits + 16 * d;

    std::vector<Cf> a;
    for (auto& [re, im] : g)
        a.push_back({mpf_class(re, prec), mpf_class(im, prec)});
    auto eval = [&](const Cf& z, Cf& p, Cf& dp) {
        p = {mpf_class(0, prec), mpf_class(0, prec)};
        dp = p;
        for (int k = d; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + a[k];
        }
    };

    mpf_class lead = cabs(a[d]);
    mpf_class radius(1, prec);
    for (int k = 0; k < d; ++k) {
        mpf_class r(cabs(a[k]), prec);
        r /= lead;
        r += 1;
        if (r > radius)
            radius = r;
    }
    std::vector<Cf> z;
    for (int k = 0; k < d; ++k) {
        double th = 2 * M_PI * k / d + 0.4;
        mpf_class c(radius, prec), s(radius, prec);
        c *= std::cos(th);
        s *= std::sin(th);
        z.push_back({c, s});
    }
    mpf_class eps(1, prec);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec / 2);
    Cf one{mpf_class(1, prec), mpf_class(0, prec)};
    for (int it = 0; it < 4000; ++it) {
        bool done = true;
        for (int k = 0; k < d; ++k) {
            Cf p{mpf_class(0, prec), mpf_class(0, prec)}, dp = p;
            eval(z[k], p, dp);
            if (sgn(p.re) == 0 && sgn(p.im) == 0)
                continue;
            Cf ratio = p / dp;
            Cf s{mpf_class(0, prec), mpf_class(0, prec)};
            for (int j = 0; j < d; ++j)
                if (j != k)
                    s = s + one / (z[k] - z[j]);
            Cf w = ratio / (one - ratio * s);
            z[k] = z[k] - w;
            mpf_class scale = cabs(z[k]);
            if (scale < 1)
                scale = 1;
            scale *= eps;
            if (cabs(w) > scale)
                done = false;
        }
        if (done)
            break;
    }
    return z;
}

} // namespace

std::pair<std::vector<Scalar>, Poly> field_roots_partial(const Poly& p0, const std::vector<Scalar>& hints)
{
    if (p0.is_zero())
        throw InvalidArgument("roots of the zero polynomial");
    Poly p = p0.monic();
    std::vector<Scalar> found;
    auto deflate = [&](const Scalar& r) {
        while (p.degree() > 0 && p(r).is_zero()) {
            found.push_back(r);
            p = divmod(p, Poly::linear_root(r)).first;
        }
    };
    for (auto& h : hints)
        deflate(h);

    Poly sf = squarefree_part(p);
    if (sf.degree() == 1) {
        deflate(-sf.coeff(0));
    } else if (sf.degree() > 1) {
        auto g = integer_scaled(sf);
        Scalar c(mpq_class(g.back().first), mpq_class(g.back().second));
        for (auto& z : approximate_roots(g)) {
            // the denominator of a root divides the leading coefficient in Z[i]
            auto prec = z.re.get_prec();
            Cf cz = Cf{mpf_class(c.re(), prec), mpf_class(c.im(), prec)} * z;
            const mpf_class& re = cz.re;
            const mpf_class& im = cz.im;
            Scalar cand = Scalar(mpq_class(round_mpf(re)), mpq_class(round_mpf(im))) / c;
            if (sf(cand).is_zero())
                deflate(cand);
        }
    }
    std::sort(found.begin(), found.end());
    return {found, p};
}

std::vector<Scalar> field_roots(const Poly& p, const std::vector<Scalar>& hints)
{
    auto [roots, rest] = field_roots_partial(p, hints);
    if (rest.degree() > 0)
        throw NotInField("roots outside the Gaussian rationals; residual factor " + rest.str());
    return roots;
}

} // namespace slocc

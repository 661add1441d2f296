#include "slocc/mpoly.hpp"

#include "slocc/errors.hpp"

namespace slocc {

MPoly MPoly::constant(size_t nvars, const Scalar& c)
{
    MPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MPoly MPoly::var(size_t nvars, size_t v)
{
    MPoly p(nvars);
    Exponent e(nvars, 0);
    e[v] = 1;
    p.add_term(e, Scalar(1));
    return p;
}

void MPoly::add_term(const Exponent& e, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        t_.erase(it);
}

bool MPoly::is_constant() const
{
    for (auto& [e, c] : t_)
        for (unsigned x : e)
            if (x)
                return false;
    return true;
}

Scalar MPoly::constant_term() const
{
    auto it = t_.find(Exponent(nvars_, 0));
    return it == t_.end() ? Scalar(0) : it->second;
}

unsigned MPoly::degree_in(size_t v) const
{
    unsigned d = 0;
    for (auto& [e, c] : t_)
        d = std::max(d, e[v]);
    return d;
}

std::vector<bool> MPoly::used() const
{
    std::vector<bool> u(nvars_, false);
    for (auto& [e, c] : t_)
        for (size_t k = 0; k < nvars_; ++k)
            if (e[k])
                u[k] = true;
    return u;
}

size_t MPoly::used_count() const
{
    size_t n = 0;
    for (bool b : used())
        n += b;
    return n;
}

std::vector<MPoly> MPoly::coeffs_in(size_t v) const
{
    std::vector<MPoly> out(degree_in(v) + 1, MPoly(nvars_));
    for (auto& [e, c] : t_) {
        Exponent f = e;
        f[v] = 0;
        out[e[v]].add_term(f, c);
    }
    return out;
}

MPoly MPoly::substitute(size_t v, const Scalar& value) const
{
    MPoly r(nvars_);
    for (auto& [e, c] : t_) {
        Exponent f = e;
        f[v] = 0;
        r.add_term(f, c * pow(value, e[v]));
    }
    return r;
}

MPoly MPoly::substitute(size_t v, const MPoly& num, const MPoly& den) const
{
    auto cs = coeffs_in(v);
    unsigned d = static_cast<unsigned>(cs.size()) - 1;
    MPoly r(nvars_);
    std::vector<MPoly> np{constant(nvars_, 1)}, dp{constant(nvars_, 1)};
    for (unsigned k = 1; k <= d; ++k) {
        np.push_back(np.back() * num);
        dp.push_back(dp.back() * den);
    }
    for (unsigned k = 0; k <= d; ++k)
        if (!cs[k].is_zero())
            r += cs[k] * np[k] * dp[d - k];
    return r;
}

Scalar MPoly::eval(const std::vector<Scalar>& point) const
{
    Scalar s;
    for (auto& [e, c] : t_) {
        Scalar t = c;
        for (size_t k = 0; k < nvars_; ++k)
            if (e[k])
                t *= pow(point[k], e[k]);
        s += t;
    }
    return s;
}

Poly MPoly::univariate(size_t v) const
{
    std::vector<Scalar> c(degree_in(v) + 1);
    for (auto& [e, x] : t_) {
        for (size_t k = 0; k < nvars_; ++k)
            if (k != v && e[k])
                throw InvalidArgument("polynomial is not univariate");
        c[e[v]] += x;
    }
    return Poly(std::move(c));
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    if (nvars_ == 0)
        nvars_ = o.nvars_;
    for (auto& [e, c] : o.t_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    if (nvars_ == 0)
        nvars_ = o.nvars_;
    for (auto& [e, c] : o.t_)
        add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly r(std::max(a.nvars_, b.nvars_));
    for (auto& [ea, ca] : a.t_)
        for (auto& [eb, cb] : b.t_) {
            MPoly::Exponent e = ea;
            for (size_t k = 0; k < e.size(); ++k)
                e[k] += eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly operator*(MPoly a, const Scalar& s)
{
    if (s.is_zero())
        return MPoly(a.nvars_);
    for (auto& [e, c] : a.t_)
        c *= s;
    return a;
}

MPoly pow(const MPoly& p, unsigned e)
{
    MPoly r = MPoly::constant(p.nvars(), 1);
    for (unsigned k = 0; k < e; ++k)
        r = r * p;
    return r;
}

} // namespace slocc

#ifndef SLOCC_MPOLY_HPP
#define SLOCC_MPOLY_HPP

#include "slocc/poly.hpp"

#include <map>
#include <vector>

namespace slocc {

// sparse polynomial in a fixed number of variables, used by the witness solver
class MPoly {
public:
    using Exponent = std::vector<unsigned>;

    MPoly() = default;
    explicit MPoly(size_t nvars) : nvars_(nvars) {}
    static MPoly constant(size_t nvars, const Scalar& c);
    static MPoly var(size_t nvars, size_t v);

    size_t nvars() const { return nvars_; }
    const std::map<Exponent, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    unsigned degree_in(size_t v) const;
    std::vector<bool> used() const;
    size_t used_count() const;
    // coefficient of v^k, as a polynomial not involving v
    std::vector<MPoly> coeffs_in(size_t v) const;

    MPoly substitute(size_t v, const Scalar& value) const;
    // P(v = num/den) * den^deg_v(P)
    MPoly substitute(size_t v, const MPoly& num, const MPoly& den) const;
    Scalar eval(const std::vector<Scalar>& point) const;
    // only valid when v is the sole variable in use
    Poly univariate(size_t v) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Scalar& s);
    friend MPoly operator*(const Scalar& s, MPoly a) { return std::move(a) * s; }
    friend bool operator==(const MPoly&, const MPoly&) = default;

private:
    void add_term(const Exponent& e, const Scalar& c);
    size_t nvars_ = 0;
    std::map<Exponent, Scalar> t_;
};

MPoly pow(const MPoly& p, unsigned e);

} // namespace slocc

#endif

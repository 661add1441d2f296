#ifndef SLOCC_POLY_HPP
#define SLOCC_POLY_HPP

#include "slocc/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace slocc {

// dense univariate polynomial over the Gaussian rationals, coefficients low to high
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> c);
    static Poly constant(const Scalar& s) { return Poly({s}); }
    static Poly x() { return Poly({Scalar(0), Scalar(1)}); }
    // x - r
    static Poly linear_root(const Scalar& r) { return Poly({-r, Scalar(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    const Scalar& lead() const { return c_.back(); }

    Scalar operator()(const Scalar& x) const;
    Poly derivative() const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Scalar> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
Poly squarefree_part(const Poly& p);

// roots of p in the Gaussian rationals, with multiplicity, sorted.
// hints are tried first; the rest is found by approximating the roots of the
// square-free part numerically and verifying rounded candidates exactly.
// Throws NotInField naming the leftover factor when some root is outside the field.
std::vector<Scalar> field_roots(const Poly& p, const std::vector<Scalar>& hints = {});

// distinct roots in the field, no error for the leftover; second = leftover factor (monic)
std::pair<std::vector<Scalar>, Poly> field_roots_partial(const Poly& p, const std::vector<Scalar>& hints = {});

} // namespace slocc

#endif

// Univariate polynomials in H over F_c, the coefficient ring of the
// whole computation. H carries quantum degree -2.
#ifndef BNKIT_POLY_HPP
#define BNKIT_POLY_HPP

#include <utility>
#include <vector>

#include "bnkit/field.hpp"

namespace bnkit {

class Poly {
public:
    Poly() = default;
    explicit Poly(FieldChar c) : c_(c) {}
    Poly(FieldChar c, std::int64_t constant);
    // coefficients[k] is the coefficient of H^k.
    Poly(FieldChar c, std::vector<FieldElem> coefficients);

    static Poly monomial(FieldChar c, const FieldElem &coeff, int degree);
    static Poly monomial(FieldChar c, std::int64_t coeff, int degree);

    FieldChar characteristic() const { return c_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    FieldElem coeff(int k) const;
    const FieldElem &leading() const;
    bool is_monomial() const;
    // Nonzero constant.
    bool is_unit() const { return degree() == 0; }

    Poly operator-() const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    Poly &operator*=(const Poly &o) { return *this = *this * o; }
    Poly operator*(const FieldElem &s) const;

    friend bool operator==(const Poly &a, const Poly &b);
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    // Value at H = s; used by the Lee specialization.
    FieldElem eval(const FieldElem &s) const;

    std::string to_string() const;

private:
    void trim();

    FieldChar c_;
    std::vector<FieldElem> coeffs_;  // empty <=> zero; back() nonzero otherwise
};

// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly &a, const Poly &b);

// True when b divides a exactly.
bool poly_divides(const Poly &b, const Poly &a);

}  // namespace bnkit

#endif

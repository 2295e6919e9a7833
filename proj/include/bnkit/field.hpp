// Exact coefficient arithmetic over prime fields F_c and over Q (c = 0).
#ifndef BNKIT_FIELD_HPP
#define BNKIT_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bnkit {

using Rational = boost::multiprecision::cpp_rational;

// Characteristic of the coefficient field: 0 (rationals) or a prime.
class FieldChar {
public:
    FieldChar() : c_(0) {}
    explicit FieldChar(std::int64_t c);

    std::int64_t value() const { return c_; }
    bool is_rational() const { return c_ == 0; }

    friend bool operator==(const FieldChar &a, const FieldChar &b) { return a.c_ == b.c_; }
    friend bool operator!=(const FieldChar &a, const FieldChar &b) { return a.c_ != b.c_; }

    std::string to_string() const { return std::to_string(c_); }

private:
    std::int64_t c_;
};

// A field element: least nonnegative residue mod c, or a reduced rational
// when c = 0. Elements carry their characteristic; mixing characteristics
// throws.
class FieldElem {
public:
    FieldElem() : c_(0), res_(0) {}
    FieldElem(FieldChar c, std::int64_t v);
    FieldElem(FieldChar c, const Rational &v);

    FieldChar characteristic() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem &operator+=(const FieldElem &o);
    FieldElem &operator-=(const FieldElem &o);
    FieldElem &operator*=(const FieldElem &o);
    FieldElem &operator/=(const FieldElem &o);
    FieldElem inverse() const;

    friend FieldElem operator+(FieldElem a, const FieldElem &b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem &b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem &b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem &b) { return a /= b; }
    friend bool operator==(const FieldElem &a, const FieldElem &b);
    friend bool operator!=(const FieldElem &a, const FieldElem &b) { return !(a == b); }

    // Residue for c > 0, the rational value for c = 0.
    std::int64_t residue() const { return res_; }
    const Rational &rational() const { return rat_; }

    std::string to_string() const;

private:
    void check_same(const FieldElem &o) const;

    FieldChar c_;
    std::int64_t res_;  // value when c_ > 0
    Rational rat_;      // value when c_ == 0
};

// Convenience constructors bound to a characteristic.
inline FieldElem field_zero(FieldChar c) { return FieldElem(c, 0); }
inline FieldElem field_one(FieldChar c) { return FieldElem(c, 1); }

}  // namespace bnkit

#endif

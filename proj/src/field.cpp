#include "bnkit/field.hpp"

namespace bnkit {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t c) {
    std::int64_t r = v % c;
    return r < 0 ? r + c : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t c) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % c);
}

// a^(c-2) mod c: inverse by Fermat.
std::int64_t mod_inv(std::int64_t a, std::int64_t c) {
    std::int64_t e = c - 2, acc = 1, base = a;
    while (e > 0) {
        if (e & 1) acc = mod_mul(acc, base, c);
        base = mod_mul(base, base, c);
        e >>= 1;
    }
    return acc;
}

}  // namespace

FieldChar::FieldChar(std::int64_t c) : c_(c) {
    if (c != 0 && !is_prime(c))
        throw std::invalid_argument("field characteristic must be 0 or prime, got " + std::to_string(c));
}

FieldElem::FieldElem(FieldChar c, std::int64_t v) : c_(c), res_(0) {
    if (c.is_rational())
        rat_ = v;
    else
        res_ = mod_reduce(v, c.value());
}

FieldElem::FieldElem(FieldChar c, const Rational &v) : c_(c), res_(0) {
    if (c.is_rational()) {
        rat_ = v;
    } else {
        // A rational maps into F_c when its denominator is invertible.
        std::int64_t den = static_cast<std::int64_t>(boost::multiprecision::denominator(v) % c.value());
        std::int64_t num = static_cast<std::int64_t>(boost::multiprecision::numerator(v) % c.value());
        if (den == 0) throw std::invalid_argument("denominator not invertible mod " + c.to_string());
        res_ = mod_mul(mod_reduce(num, c.value()), mod_inv(mod_reduce(den, c.value()), c.value()), c.value());
    }
}

void FieldElem::check_same(const FieldElem &o) const {
    if (c_ != o.c_)
        throw std::invalid_argument("field characteristic mismatch: " + c_.to_string() + " vs " + o.c_.to_string());
}

bool FieldElem::is_zero() const { return c_.is_rational() ? rat_.is_zero() : res_ == 0; }
bool FieldElem::is_one() const { return c_.is_rational() ? rat_ == 1 : res_ == 1; }

FieldElem FieldElem::operator-() const {
    FieldElem r(*this);
    if (c_.is_rational())
        r.rat_ = -rat_;
    else
        r.res_ = res_ == 0 ? 0 : c_.value() - res_;
    return r;
}

FieldElem &FieldElem::operator+=(const FieldElem &o) {
    check_same(o);
    if (c_.is_rational()) {
        rat_ += o.rat_;
    } else {
        res_ += o.res_;
        if (res_ >= c_.value()) res_ -= c_.value();
    }
    return *this;
}

FieldElem &FieldElem::operator-=(const FieldElem &o) {
    check_same(o);
    if (c_.is_rational()) {
        rat_ -= o.rat_;
    } else {
        res_ -= o.res_;
        if (res_ < 0) res_ += c_.value();
    }
    return *this;
}

FieldElem &FieldElem::operator*=(const FieldElem &o) {
    check_same(o);
    if (c_.is_rational())
        rat_ *= o.rat_;
    else
        res_ = mod_mul(res_, o.res_, c_.value());
    return *this;
}

FieldElem &FieldElem::operator/=(const FieldElem &o) {
    check_same(o);
    if (o.is_zero()) throw std::domain_error("division by zero field element");
    if (c_.is_rational())
        rat_ /= o.rat_;
    else
        res_ = mod_mul(res_, mod_inv(o.res_, c_.value()), c_.value());
    return *this;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("zero field element has no inverse");
    FieldElem r = field_one(c_);
    r /= *this;
    return r;
}

bool operator==(const FieldElem &a, const FieldElem &b) {
    a.check_same(b);
    return a.c_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string FieldElem::to_string() const {
    if (!c_.is_rational()) return std::to_string(res_);
    return rat_.str();
}

}  // namespace bnkit

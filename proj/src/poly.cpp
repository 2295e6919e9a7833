#include "bnkit/poly.hpp"

#include <sstream>

namespace bnkit {

Poly::Poly(FieldChar c, std::int64_t constant) : c_(c) {
    FieldElem e(c, constant);
    if (!e.is_zero()) coeffs_.push_back(e);
}

Poly::Poly(FieldChar c, std::vector<FieldElem> coefficients) : c_(c), coeffs_(std::move(coefficients)) {
    for (const auto &e : coeffs_)
        if (e.characteristic() != c_) throw std::invalid_argument("coefficient characteristic mismatch");
    trim();
}

Poly Poly::monomial(FieldChar c, const FieldElem &coeff, int degree) {
    Poly p(c);
    if (coeff.is_zero()) return p;
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, field_zero(c));
    p.coeffs_.back() = coeff;
    return p;
}

Poly Poly::monomial(FieldChar c, std::int64_t coeff, int degree) {
    return monomial(c, FieldElem(c, coeff), degree);
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElem Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return field_zero(c_);
    return coeffs_[static_cast<size_t>(k)];
}

const FieldElem &Poly::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::is_monomial() const {
    if (is_zero()) return false;
    for (size_t k = 0; k + 1 < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto &e : r.coeffs_) e = -e;
    return r;
}

Poly &Poly::operator+=(const Poly &o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    if (c_ != o.c_) throw std::invalid_argument("polynomial characteristic mismatch");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_zero(c_));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &o) { return *this += -o; }

Poly operator*(const Poly &a, const Poly &b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.c_ != b.c_) throw std::invalid_argument("polynomial characteristic mismatch");
    Poly r(a.c_);
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, field_zero(a.c_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const FieldElem &s) const {
    if (s.is_zero()) return Poly(c_);
    Poly r(*this);
    for (auto &e : r.coeffs_) e *= s;
    r.trim();
    return r;
}

bool operator==(const Poly &a, const Poly &b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.c_ != b.c_ || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t k = 0; k < a.coeffs_.size(); ++k)
        if (a.coeffs_[k] != b.coeffs_[k]) return false;
    return true;
}

FieldElem Poly::eval(const FieldElem &s) const {
    FieldElem acc = field_zero(c_);
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * s + coeffs_[k];
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << coeffs_[k].to_string();
        } else {
            if (!coeffs_[k].is_one()) os << coeffs_[k].to_string() << "*";
            os << "H";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly &a, const Poly &b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    FieldChar c = b.characteristic();
    Poly q(c), r = a;
    FieldElem lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        FieldElem factor = r.leading() * lead_inv;
        Poly t = Poly::monomial(c, factor, shift);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

bool poly_divides(const Poly &b, const Poly &a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return poly_divmod(a, b).second.is_zero();
}

}  // namespace bnkit

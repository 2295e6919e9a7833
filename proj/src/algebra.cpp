#include "bnkit/algebra.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace bnkit {

BasisPath BasisPath::dpow(Vertex v, int k) {
    if (k < 1) throw std::invalid_argument("D-power exponent must be >= 1");
    return {Kind::Dpow, v, k};
}

BasisPath BasisPath::sword(Vertex v, int length) {
    if (length < 1) throw std::invalid_argument("S-word length must be >= 1");
    return {Kind::Sword, v, length};
}

Bigrading grading(const BasisPath &p) {
    switch (p.kind) {
        case BasisPath::Kind::Idem: return {0, 0};
        case BasisPath::Kind::Dpow: return {0, -2 * p.len};
        case BasisPath::Kind::Sword: return {0, -p.len};
    }
    throw std::logic_error("unreachable");
}

void AlgebraElement::add_term(const BasisPath &p, const FieldElem &coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o) {
    for (const auto &[p, v] : o.terms_) add_term(p, v);
    return *this;
}

AlgebraElement AlgebraElement::operator*(const FieldElem &s) const {
    AlgebraElement out(c_);
    if (s.is_zero()) return out;
    for (const auto &[p, v] : terms_) out.add_term(p, v * s);
    return out;
}

namespace {

// Composite "q first, then p"; nullopt encodes zero (non-composable ends or
// a D adjacent to an S).
std::optional<BasisPath> concat(const BasisPath &p, const BasisPath &q) {
    if (q.end() != p.start) return std::nullopt;
    if (p.kind == BasisPath::Kind::Idem) return q;
    if (q.kind == BasisPath::Kind::Idem) return p;
    if (p.kind != q.kind) return std::nullopt;
    if (p.kind == BasisPath::Kind::Dpow) return BasisPath::dpow(p.start, p.len + q.len);
    return BasisPath::sword(q.start, p.len + q.len);
}

}  // namespace

AlgebraElement mul(const AlgebraElement &a, const AlgebraElement &b) {
    if (a.characteristic() != b.characteristic())
        throw std::invalid_argument("characteristic mismatch in algebra product");
    AlgebraElement out(a.characteristic());
    for (const auto &[pa, ca] : a.terms())
        for (const auto &[pb, cb] : b.terms())
            if (auto p = concat(pa, pb)) out.add_term(*p, ca * cb);
    return out;
}

AlgebraElement h_element(FieldChar c) {
    AlgebraElement h(c);
    FieldElem one = field_one(c);
    h.add_term(BasisPath::sword(Vertex::Dot, 2), one);
    h.add_term(BasisPath::dpow(Vertex::Dot, 1), -one);
    h.add_term(BasisPath::sword(Vertex::Circle, 2), one);
    h.add_term(BasisPath::dpow(Vertex::Circle, 1), -one);
    return h;
}

KHDecomposition decompose_kH(const AlgebraElement &x, Vertex from, Vertex to) {
    FieldChar c = x.characteristic();
    KHDecomposition dec;
    dec.same_idem = (from == to);
    dec.coeff_1 = Poly(c);
    dec.coeff_d = Poly(c);
    dec.coeff_s = Poly(c);
    for (const auto &[p, coeff] : x.terms()) {
        if (p.start != from || p.end() != to)
            throw std::invalid_argument("mixed-idempotent input: a term does not run between the given idempotents");
        if (dec.same_idem) {
            switch (p.kind) {
                case BasisPath::Kind::Idem:
                    dec.coeff_1 += Poly::monomial(c, coeff, 0);
                    break;
                case BasisPath::Kind::Dpow: {
                    // D^k = (-H)^(k-1) D, from H·D = -D^2
                    FieldElem sign = FieldElem(c, p.len % 2 == 1 ? 1 : -1);
                    dec.coeff_d += Poly::monomial(c, coeff * sign, p.len - 1);
                    break;
                }
                case BasisPath::Kind::Sword: {
                    // S^(2m) = H^m·1 + H^(m-1)·D, from SS = H·1 + D
                    int m = p.len / 2;
                    dec.coeff_1 += Poly::monomial(c, coeff, m);
                    dec.coeff_d += Poly::monomial(c, coeff, m - 1);
                    break;
                }
            }
        } else {
            // Only odd S-words cross idempotents; S^(2m+1) = H^m·S
            dec.coeff_s += Poly::monomial(c, coeff, p.len / 2);
        }
    }
    return dec;
}

AlgebraElement expand_kH(const KHDecomposition &dec, Vertex from, FieldChar c) {
    AlgebraElement out(c);
    AlgebraElement h = h_element(c);
    auto accumulate = [&](const Poly &coeff, const BasisPath &base) {
        AlgebraElement cur(c, base);
        for (int k = 0; k <= coeff.degree(); ++k) {
            out += cur * coeff.coeff(k);
            if (k < coeff.degree()) cur = mul(h, cur);
        }
    };
    if (dec.same_idem) {
        accumulate(dec.coeff_1, BasisPath::idem(from));
        accumulate(dec.coeff_d, BasisPath::dpow(from, 1));
    } else {
        accumulate(dec.coeff_s, BasisPath::sword(from, 1));
    }
    return out;
}

namespace {

std::string coeff_text(const FieldElem &v) {
    if (v.characteristic().is_rational()) {
        const Rational &r = v.rational();
        if (boost::multiprecision::denominator(r) != 1)
            throw std::invalid_argument("coefficient " + v.to_string() + " is not integral");
        return boost::multiprecision::numerator(r).str();
    }
    return std::to_string(v.residue());
}

std::string atom_text(const BasisPath &p) {
    switch (p.kind) {
        case BasisPath::Kind::Idem: return std::string("1") + vertex_mark(p.start);
        case BasisPath::Kind::Dpow: return "D^" + std::to_string(p.len) + vertex_mark(p.start);
        case BasisPath::Kind::Sword: return "S^" + std::to_string(p.len) + vertex_mark(p.start);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::string element_to_text(const AlgebraElement &x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[p, v] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        os << coeff_text(v) << "*" << atom_text(p);
    }
    return os.str();
}

AlgebraElement parse_element(const std::string &text, FieldChar c, int line, int col_base) {
    AlgebraElement out(c);
    size_t pos = 0;
    auto fail = [&](const std::string &expected) -> ParseError {
        return ParseError(line, col_base + static_cast<int>(pos), expected);
    };
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto parse_int = [&](const std::string &what) -> std::int64_t {
        size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1)) throw fail(what);
        return std::stoll(text.substr(start, pos - start));
    };
    auto parse_mark = [&]() -> Vertex {
        if (pos < text.size() && text[pos] == '.') return ++pos, Vertex::Dot;
        if (pos < text.size() && text[pos] == 'o') return ++pos, Vertex::Circle;
        throw fail("vertex mark '.' or 'o'");
    };

    skip();
    if (pos < text.size() && text[pos] == '0' &&
        text.find_first_not_of(" \t", pos + 1) == std::string::npos) {
        return out;  // the zero element
    }

    for (;;) {
        skip();
        FieldElem coeff = field_one(c);
        // "<int>*" prefix vs the atom "1." / "1o": a digit run is a
        // coefficient only when '*' follows.
        size_t mark = pos;
        if (pos < text.size() && (text[pos] == '-' || std::isdigit(static_cast<unsigned char>(text[pos])))) {
            size_t probe = pos + (text[pos] == '-' ? 1u : 0u);
            while (probe < text.size() && std::isdigit(static_cast<unsigned char>(text[probe]))) ++probe;
            if (probe < text.size() && text[probe] == '*') {
                coeff = FieldElem(c, parse_int("coefficient"));
                ++pos;  // consume '*'
            } else {
                pos = mark;
            }
        }

        if (pos >= text.size()) throw fail("atom");
        BasisPath p = BasisPath::idem(Vertex::Dot);
        char head = text[pos];
        if (head == '1') {
            ++pos;
            p = BasisPath::idem(parse_mark());
        } else if (head == 'D' || head == 'S') {
            ++pos;
            if (pos >= text.size() || text[pos] != '^') throw fail("'^'");
            ++pos;
            std::int64_t k = parse_int("positive exponent");
            if (k < 1) throw fail("positive exponent");
            Vertex v = parse_mark();
            p = head == 'D' ? BasisPath::dpow(v, static_cast<int>(k))
                            : BasisPath::sword(v, static_cast<int>(k));
        } else {
            throw fail("atom '1', 'D' or 'S'");
        }
        out.add_term(p, coeff);

        skip();
        if (pos >= text.size()) break;
        if (text[pos] != '+') throw fail("'+' or end of element");
        ++pos;
    }
    return out;
}

}  // namespace bnkit

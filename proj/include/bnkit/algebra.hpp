// The Bar-Natan algebra: paths of the two-vertex quiver (vertices "dot" and
// "circle", arrows S and D) modulo D.S = S.D = 0 at both vertices. Every
// nonzero path collapses to an idempotent, a pure D-power, or a pure S-word,
// which is what BasisPath stores.
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "bnkit/complex.hpp"
#include "bnkit/field.hpp"
#include "bnkit/poly.hpp"

namespace bnkit {

enum class Vertex : int { Dot = 0, Circle = 1 };

inline Vertex other(Vertex v) { return v == Vertex::Dot ? Vertex::Circle : Vertex::Dot; }
inline char vertex_mark(Vertex v) { return v == Vertex::Dot ? '.' : 'o'; }

struct BasisPath {
    enum class Kind : int { Idem = 0, Dpow = 1, Sword = 2 };
    Kind kind = Kind::Idem;
    Vertex start = Vertex::Dot;
    int len = 0;  // 0 for Idem; k >= 1 for Dpow; word length >= 1 for Sword

    static BasisPath idem(Vertex v) { return {Kind::Idem, v, 0}; }
    static BasisPath dpow(Vertex v, int k);
    static BasisPath sword(Vertex v, int length);

    // S alternates vertices, D stays put.
    Vertex end() const { return kind == Kind::Sword && len % 2 != 0 ? other(start) : start; }

    friend auto operator<=>(const BasisPath &, const BasisPath &) = default;
};

Bigrading grading(const BasisPath &p);

class AlgebraElement {
public:
    explicit AlgebraElement(FieldChar c) : c_(c) {}
    AlgebraElement(FieldChar c, const BasisPath &p) : c_(c) { add_term(p, field_one(c)); }

    void add_term(const BasisPath &p, const FieldElem &coeff);
    const std::map<BasisPath, FieldElem> &terms() const { return terms_; }
    FieldChar characteristic() const { return c_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement &operator+=(const AlgebraElement &o);
    AlgebraElement operator*(const FieldElem &s) const;
    friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;

private:
    FieldChar c_;
    std::map<BasisPath, FieldElem> terms_;
};

// mul(a, b) composes b first, then a; incompatible idempotents and any D
// adjacent to an S give zero.
AlgebraElement mul(const AlgebraElement &a, const AlgebraElement &b);

// H = SS. - D. + SSo - Do, central of bigrading (0, -2).
AlgebraElement h_element(FieldChar c);

// An element with all terms from one idempotent to another, rewritten in the
// free F_c[H]-basis of that morphism space: {1, D} when the idempotents are
// equal, {S} otherwise.
struct KHDecomposition {
    bool same_idem = true;
    Poly coeff_1, coeff_d;  // same_idem
    Poly coeff_s;           // !same_idem
};

KHDecomposition decompose_kH(const AlgebraElement &x, Vertex from, Vertex to);
AlgebraElement expand_kH(const KHDecomposition &dec, Vertex from, FieldChar c);

// Textual grammar (used by the typed v1 file format): terms joined by " + ",
// each "<int>*<atom>", atom one of 1. 1o D^<k>. D^<k>o S^<len>. S^<len>o,
// trailing mark = start vertex. The zero element prints as "0".
struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string &expected)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": expected " + expected),
          line(line_), col(col_) {}
};

std::string element_to_text(const AlgebraElement &x);
AlgebraElement parse_element(const std::string &text, FieldChar c, int line = 0, int col_base = 1);

}  // namespace bnkit

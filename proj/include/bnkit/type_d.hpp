// Bigraded type D structures over the Bar-Natan algebra: labelled directed
// graphs whose consecutive labels compose to zero. Arrow convention:
// h(dst) = h(src) + 1 and q(dst) = q(src) - q(label component).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnkit/algebra.hpp"

namespace bnkit {

struct TypeDGenerator {
    std::string id;
    Vertex idem = Vertex::Dot;
    Bigrading gr;
    friend bool operator==(const TypeDGenerator &, const TypeDGenerator &) = default;
};

struct TypeDArrow {
    std::string src, dst;
    AlgebraElement label;
    friend bool operator==(const TypeDArrow &, const TypeDArrow &) = default;
};

// Kept in canonical order (generators by (h, q, id), arrows by (src, dst))
// so equality is plain field equality. Call canonicalize() after building
// one by hand.
struct TypeDStructure {
    FieldChar characteristic;
    std::vector<TypeDGenerator> generators;
    std::vector<TypeDArrow> arrows;

    void canonicalize();
    const TypeDGenerator *find(const std::string &id) const;
    friend bool operator==(const TypeDStructure &, const TypeDStructure &) = default;
};

// Empty iff valid: checks arrow endpoints, idempotent compatibility of every
// label term, the arrow grading convention, and delta^2 = 0.
std::vector<std::string> validate(const TypeDStructure &t);

// The rational twist tangle invariant. n = 0 is a lone dot generator at
// (0, 0); n > 0 runs dot(0, n) -S-> circle ... with labels S, D, SS, D, ...;
// n < 0 is the mirrored pattern ..., D, SS, D, S ending at dot(0, n), other
// gradings propagated backwards from that anchor.
TypeDStructure build_qn(int n, FieldChar c);

TypeDStructure shift(const TypeDStructure &t, int dh, int dq);

struct RationalMatch {
    int n = 0, dh = 0, dq = 0;
    friend bool operator==(const RationalMatch &, const RationalMatch &) = default;
};

// Matches t against shift(build_qn(n), dh, dq) for some n; the dot generator
// is the source of an S arrow for n > 0 and the target for n < 0.
std::optional<RationalMatch> identify_rational(const TypeDStructure &t);

// The slope of the underlying curve line, i.e. the matched n; throws
// std::invalid_argument on non-rational input.
int theta_of_rational(const TypeDStructure &t);

// File format "typed v1": header line, "char <c>", gen lines, arrow lines,
// '#' comments. Parse errors throw ParseError with line/column.
TypeDStructure parse_typed(const std::string &text);
std::string serialize_typed(const TypeDStructure &t);

}  // namespace bnkit

#pragma once

#include <map>
#include <string>
#include <vector>

#include "bnkit/matrix.hpp"
#include "bnkit/poly.hpp"

namespace bnkit {

struct Bigrading {
    int h = 0;
    int q = 0;
    friend auto operator<=>(const Bigrading &, const Bigrading &) = default;
};

struct TorsionSummand {
    int h = 0;
    int q = 0;
    int ord = 1;  // annihilated by H^ord
    friend auto operator<=>(const TorsionSummand &, const TorsionSummand &) = default;
};

// Multiset of free towers F_c[H] and torsion pieces F_c[H]/(H^m), each with a
// bigrading. Kept canonically sorted so that equality is multiset equality.
struct HomologySummary {
    std::vector<Bigrading> towers;
    std::vector<TorsionSummand> torsion;

    void canonicalize();
    std::string to_text() const;  // one line per summand, sorted by (h, q, kind, ord)
    friend bool operator==(const HomologySummary &, const HomologySummary &) = default;
};

// Finitely generated free complex over F_c[H]. Differential stored sparsely
// as (target, source) -> Poly; absent means zero.
class FreeBigradedComplex {
public:
    explicit FreeBigradedComplex(FieldChar c) : c_(c), zero_(c) {}

    int add_generator(Bigrading gr) {
        gens_.push_back(gr);
        return static_cast<int>(gens_.size()) - 1;
    }
    // Accumulates into the (target, source) entry; erases it if the sum vanishes.
    void add_entry(int target, int source, const Poly &p);
    const Poly &entry(int target, int source) const;

    int size() const { return static_cast<int>(gens_.size()); }
    Bigrading grading(int i) const { return gens_.at(static_cast<size_t>(i)); }
    FieldChar characteristic() const { return c_; }
    const std::map<std::pair<int, int>, Poly> &entries() const { return d_; }

private:
    FieldChar c_;
    Poly zero_;
    std::vector<Bigrading> gens_;
    std::map<std::pair<int, int>, Poly> d_;
};

struct ComplexValidation {
    std::vector<std::string> homogeneity;  // one message per offending entry
    std::vector<std::string> d_squared;    // one message per nonzero entry of d^2
    bool ok() const { return homogeneity.empty() && d_squared.empty(); }
    std::string to_string() const;
};

ComplexValidation validate_complex(const FreeBigradedComplex &c);

// Homology of a valid complex as towers + torsion over F_c[H]. Throws
// std::invalid_argument quoting the first offending entry if validation fails.
HomologySummary free_homology(const FreeBigradedComplex &c);

// Dimensions of homology per homological grading after setting H = 1
// (quantum grading collapses). Used by the Lee-style control computation.
std::map<int, int> homology_dims_at_h1(const FreeBigradedComplex &c);

}  // namespace bnkit

// Ground-truth side: Bar-Natan homology of 2-strand braid closures from an
// explicit cube of resolutions over the Frobenius algebra {1, X} with
// X² = H·X, plus its H = 1 (Lee) specialization and linking numbers.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>

#include "bnkit/complex.hpp"

namespace bnkit {

// Closure of the braid word sigma_1^n. The orientation flag only affects
// crossing signs (and so n+/n-); the underlying curves are the same.
struct LinkDiagram {
    int n = 0;
    bool parallel = true;  // strand orientations; reversing one component flips this
    int basepoint_strand = 0;

    int components() const { return n % 2 == 0 ? 2 : 1; }
    int n_minus() const { return parallel ? std::max(-n, 0) : std::max(n, 0); }
    int n_plus() const { return std::abs(n) - n_minus(); }
};

LinkDiagram torus_diagram(int n);

// Half the signed count of inter-component crossings; rejects knots. Also
// recounts n- with one component reversed and checks it grew by exactly 2*lk.
int linking_number(const LinkDiagram &d);

// Cube of resolutions complex over F_c[H]. Gradings: h = |v| - n-,
// q = internal + |v| + n+ - 2n-; the reduced complex keeps the labelings
// whose marked circle carries X and shifts q by +1.
FreeBigradedComplex cbn_complex(const LinkDiagram &d, FieldChar c, bool reduced);

// Dimension of homology per homological grading after setting H = 1.
std::map<int, int> lee_homology_dims(const LinkDiagram &d, FieldChar c);

}  // namespace bnkit

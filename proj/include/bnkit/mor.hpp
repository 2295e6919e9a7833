// Internal-Hom complex of two type D structures over the Bar-Natan algebra,
// and reduced Bar-Natan homology of tangle closures via pairing with the
// trivial dot tangle.
#pragma once

#include <vector>

#include "bnkit/complex.hpp"
#include "bnkit/type_d.hpp"

namespace bnkit {

// Basis element of Mor(T1, T2): a generator pair and one atom of the free
// F_c[H]-basis of the morphism space between their idempotents ({1, D} when
// equal, {S} when not).
struct MorGenerator {
    int src_index = 0;  // into T1.generators
    int dst_index = 0;  // into T2.generators
    BasisPath atom;
    Bigrading gr;  // grading(dst) - grading(src) + grading(atom)
};

// Differential D(f) = (-1)^h(f)·f∘δ₁ − δ₂∘f, expanded through decompose_kH.
// The Koszul sign on the precomposition term is what makes d² = 0 away from
// characteristic 2; with δ₁ = 0 (closures) it reduces to the unsigned form.
// Passes validate_complex by construction. `basis`, when given, receives the
// generator descriptions parallel to the complex indices.
FreeBigradedComplex mor_complex(const TypeDStructure &t1, const TypeDStructure &t2,
                                std::vector<MorGenerator> *basis = nullptr);

// Homology of Mor(dot(0,0), T) with all quantum gradings shifted by +1.
HomologySummary reduced_bn_of_closure(const TypeDStructure &t);

// Reduced Bar-Natan homology of the (2, n) torus closure: the n-twist chain
// paired against the trivial tangle.
HomologySummary torus_link_bn(int n, FieldChar c);

}  // namespace bnkit

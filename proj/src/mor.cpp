#include "bnkit/mor.hpp"

#include <map>
#include <stdexcept>

namespace bnkit {

FreeBigradedComplex mor_complex(const TypeDStructure &t1, const TypeDStructure &t2,
                                std::vector<MorGenerator> *basis) {
    if (t1.characteristic != t2.characteristic)
        throw std::invalid_argument("characteristic mismatch between type D structures");
    for (const TypeDStructure *t : {&t1, &t2}) {
        auto issues = validate(*t);
        if (!issues.empty())
            throw std::invalid_argument("invalid type D structure: " + issues.front());
    }

    FieldChar c = t1.characteristic;
    int n1 = static_cast<int>(t1.generators.size());
    int n2 = static_cast<int>(t2.generators.size());

    FreeBigradedComplex cx(c);
    std::vector<MorGenerator> gens;
    // index of (i1, i2, rank) where rank 0 = the "1"/"S" atom, 1 = "D"
    std::vector<int> idx(static_cast<size_t>(n1) * static_cast<size_t>(n2) * 2, -1);
    auto slot = [n2](int i1, int i2, int rank) {
        return (static_cast<size_t>(i1) * static_cast<size_t>(n2) + static_cast<size_t>(i2)) * 2 +
               static_cast<size_t>(rank);
    };

    for (int i1 = 0; i1 < n1; ++i1)
        for (int i2 = 0; i2 < n2; ++i2) {
            const TypeDGenerator &g1 = t1.generators[static_cast<size_t>(i1)];
            const TypeDGenerator &g2 = t2.generators[static_cast<size_t>(i2)];
            std::vector<BasisPath> atoms;
            if (g1.idem == g2.idem) {
                atoms = {BasisPath::idem(g1.idem), BasisPath::dpow(g1.idem, 1)};
            } else {
                atoms = {BasisPath::sword(g1.idem, 1)};
            }
            for (size_t r = 0; r < atoms.size(); ++r) {
                Bigrading ga = grading(atoms[r]);
                Bigrading gr{g2.gr.h - g1.gr.h + ga.h, g2.gr.q - g1.gr.q + ga.q};
                idx[slot(i1, i2, static_cast<int>(r))] = cx.add_generator(gr);
                gens.push_back({i1, i2, atoms[r], gr});
            }
        }

    std::map<std::string, int> pos1, pos2;
    for (int i = 0; i < n1; ++i) pos1[t1.generators[static_cast<size_t>(i)].id] = i;
    for (int i = 0; i < n2; ++i) pos2[t2.generators[static_cast<size_t>(i)].id] = i;

    auto emit = [&](int fi, int j1, int j2, const AlgebraElement &value, const FieldElem &scale) {
        if (value.is_zero()) return;
        Vertex from = t1.generators[static_cast<size_t>(j1)].idem;
        Vertex to = t2.generators[static_cast<size_t>(j2)].idem;
        KHDecomposition dec = decompose_kH(value, from, to);
        if (dec.same_idem) {
            cx.add_entry(idx[slot(j1, j2, 0)], fi, dec.coeff_1 * scale);
            cx.add_entry(idx[slot(j1, j2, 1)], fi, dec.coeff_d * scale);
        } else {
            cx.add_entry(idx[slot(j1, j2, 0)], fi, dec.coeff_s * scale);
        }
    };

    for (size_t fi = 0; fi < gens.size(); ++fi) {
        const MorGenerator &f = gens[fi];
        AlgebraElement atom(c, f.atom);
        // (-1)^h(f)·f∘δ₁: arrows of T1 into the source generator
        FieldElem pre_sign = FieldElem(c, f.gr.h % 2 == 0 ? 1 : -1);
        for (const auto &a : t1.arrows) {
            if (pos1.at(a.dst) != f.src_index) continue;
            emit(static_cast<int>(fi), pos1.at(a.src), f.dst_index, mul(atom, a.label), pre_sign);
        }
        // -δ₂∘f: arrows of T2 out of the target generator
        for (const auto &b : t2.arrows) {
            if (pos2.at(b.src) != f.dst_index) continue;
            emit(static_cast<int>(fi), f.src_index, pos2.at(b.dst), mul(b.label, atom), FieldElem(c, -1));
        }
    }

    if (basis) *basis = std::move(gens);
    return cx;
}

HomologySummary reduced_bn_of_closure(const TypeDStructure &t) {
    TypeDStructure dot{t.characteristic, {{"g0", Vertex::Dot, {0, 0}}}, {}};
    HomologySummary s = free_homology(mor_complex(dot, t));
    for (auto &tw : s.towers) tw.q += 1;
    for (auto &to : s.torsion) to.q += 1;
    s.canonicalize();
    return s;
}

HomologySummary torus_link_bn(int n, FieldChar c) { return reduced_bn_of_closure(build_qn(n, c)); }

}  // namespace bnkit

#include "bnkit/cube.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bnkit {

LinkDiagram torus_diagram(int n) { return {n, true, 0}; }

int linking_number(const LinkDiagram &d) {
    if (d.components() != 2)
        throw std::invalid_argument("linking number needs a 2-component diagram");
    int lk = (d.parallel ? d.n : -d.n) / 2;
    LinkDiagram rev = d;
    rev.parallel = !rev.parallel;
    if (rev.n_minus() != d.n_minus() + 2 * lk)
        throw std::logic_error("reversal recount violates n-(o1) = n-(o0) + 2*lk");
    return lk;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<size_t>(n)) {
        for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (p[static_cast<size_t>(x)] != x) x = p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
        return x;
    }
    void join(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

// Arcs of the closed 2-braid: level i in 0..m-1 (cyclic), side L/R, arc
// index 2i + side. Crossing i sits between levels i and i+1.
struct VertexInfo {
    std::vector<int> circ;     // arc -> circle id, ids in order of first arc
    std::vector<int> min_arc;  // circle id -> first arc on it
    int ncirc = 0;
    long long base = 0;  // index of this vertex's first generator
};

VertexInfo resolve(int m, bool zero_is_identity, unsigned v) {
    VertexInfo info;
    if (m == 0) {  // closure of the empty braid: two parallel circles
        info.ncirc = 2;
        info.min_arc = {-1, -1};
        return info;
    }
    Dsu dsu(2 * m);
    auto arc = [m](int level, int side) { return 2 * (level % m) + side; };
    for (int i = 0; i < m; ++i) {
        bool bit = (v >> i) & 1u;
        bool cup = zero_is_identity ? bit : !bit;
        if (cup) {
            dsu.join(arc(i, 0), arc(i, 1));
            dsu.join(arc(i + 1, 0), arc(i + 1, 1));
        } else {
            dsu.join(arc(i, 0), arc(i + 1, 0));
            dsu.join(arc(i, 1), arc(i + 1, 1));
        }
    }
    info.circ.assign(static_cast<size_t>(2 * m), -1);
    std::vector<int> root_to_id(static_cast<size_t>(2 * m), -1);
    for (int a = 0; a < 2 * m; ++a) {
        int r = dsu.find(a);
        if (root_to_id[static_cast<size_t>(r)] < 0) {
            root_to_id[static_cast<size_t>(r)] = info.ncirc++;
            info.min_arc.push_back(a);
        }
        info.circ[static_cast<size_t>(a)] = root_to_id[static_cast<size_t>(r)];
    }
    return info;
}

}  // namespace

FreeBigradedComplex cbn_complex(const LinkDiagram &d, FieldChar c, bool reduced) {
    int m = std::abs(d.n);
    if (m > 20) throw std::invalid_argument("scale guard exceeded: |n| <= 20");
    bool zero_id = d.n >= 0;  // positive braid generators resolve 0 -> identity
    int npl = d.n_plus(), nmi = d.n_minus();
    int qshift = reduced ? 1 : 0;

    unsigned nverts = 1u << m;
    std::vector<VertexInfo> info(nverts);
    long long total = 0;
    for (unsigned v = 0; v < nverts; ++v) {
        info[v] = resolve(m, zero_id, v);
        info[v].base = total;
        total += 1ll << (info[v].ncirc - (reduced ? 1 : 0));
    }
    if (total > std::numeric_limits<int>::max())
        throw std::length_error("resolution cube exceeds index capacity");

    FreeBigradedComplex cx(c);
    for (unsigned v = 0; v < nverts; ++v) {
        const VertexInfo &vi = info[v];
        int weight = std::popcount(v);
        int h = weight - nmi;
        unsigned nmask = 1u << vi.ncirc;
        for (unsigned mask = reduced ? 1u : 0u; mask < nmask; mask += reduced ? 2u : 1u) {
            int internal = vi.ncirc - 2 * std::popcount(mask);
            cx.add_generator({h, internal + weight + npl - 2 * nmi + qshift});
        }
    }

    // The marked circle always has id 0 (it contains arc 0; for m = 0 we put
    // the basepoint on the first circle), so reduced masks are the odd ones.
    auto index_of = [&](const VertexInfo &vi, unsigned mask) {
        return static_cast<int>(vi.base + (reduced ? mask >> 1 : mask));
    };

    FieldElem one = field_one(c);
    for (unsigned v = 0; v < nverts; ++v) {
        const VertexInfo &a = info[v];
        for (int i = 0; i < m; ++i) {
            if ((v >> i) & 1u) continue;
            unsigned v2 = v | (1u << i);
            const VertexInfo &b = info[v2];
            FieldElem sign = std::popcount(v & ((1u << i) - 1u)) % 2 == 0 ? one : -one;

            int l1 = 2 * i, r1 = 2 * i + 1;
            int l2 = 2 * ((i + 1) % m), r2 = l2 + 1;
            int A, B;
            if (zero_id) {  // identity -> cupcap: the two strands at the crossing
                A = a.circ[static_cast<size_t>(l1)];
                B = a.circ[static_cast<size_t>(r1)];
            } else {  // cupcap -> identity: the circles above and below
                A = a.circ[static_cast<size_t>(l1)];
                B = a.circ[static_cast<size_t>(l2)];
            }
            (void)r2;

            std::vector<int> carry(static_cast<size_t>(a.ncirc), -1);
            for (int cid = 0; cid < a.ncirc; ++cid)
                if (cid != A && cid != B)
                    carry[static_cast<size_t>(cid)] = b.circ[static_cast<size_t>(a.min_arc[static_cast<size_t>(cid)])];

            unsigned nmask = 1u << a.ncirc;
            for (unsigned mask = reduced ? 1u : 0u; mask < nmask; mask += reduced ? 2u : 1u) {
                unsigned t0 = 0;
                for (int cid = 0; cid < a.ncirc; ++cid)
                    if (carry[static_cast<size_t>(cid)] >= 0 && ((mask >> cid) & 1u))
                        t0 |= 1u << carry[static_cast<size_t>(cid)];
                int src = index_of(a, mask);
                auto add = [&](unsigned tmask, const FieldElem &coeff, int hpow) {
                    cx.add_entry(index_of(b, tmask), src, Poly::monomial(c, coeff * sign, hpow));
                };

                if (A != B) {  // merge: m(1,1)=1, m(1,X)=m(X,1)=X, m(X,X)=H·X
                    int C = b.circ[static_cast<size_t>(l1)];
                    bool xa = (mask >> A) & 1u, xb = (mask >> B) & 1u;
                    if (xa && xb)
                        add(t0 | (1u << C), one, 1);
                    else if (xa || xb)
                        add(t0 | (1u << C), one, 0);
                    else
                        add(t0, one, 0);
                } else {  // split: Δ(X)=X⊗X, Δ(1)=1⊗X+X⊗1-H·1⊗1
                    int C1 = b.circ[static_cast<size_t>(l1)];
                    int C2 = zero_id ? b.circ[static_cast<size_t>(l2)] : b.circ[static_cast<size_t>(r1)];
                    if ((mask >> A) & 1u) {
                        add(t0 | (1u << C1) | (1u << C2), one, 0);
                    } else {
                        add(t0 | (1u << C2), one, 0);
                        add(t0 | (1u << C1), one, 0);
                        add(t0, -one, 1);
                    }
                }
            }
        }
    }
    return cx;
}

std::map<int, int> lee_homology_dims(const LinkDiagram &d, FieldChar c) {
    return homology_dims_at_h1(cbn_complex(d, c, false));
}

}  // namespace bnkit

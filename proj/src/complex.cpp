#include "bnkit/complex.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace bnkit {

void FreeBigradedComplex::add_entry(int target, int source, const Poly &p) {
    if (target < 0 || target >= size() || source < 0 || source >= size())
        throw std::out_of_range("generator index out of range");
    if (p.is_zero()) return;
    auto key = std::make_pair(target, source);
    auto it = d_.find(key);
    if (it == d_.end()) {
        d_.emplace(key, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) d_.erase(it);
    }
}

const Poly &FreeBigradedComplex::entry(int target, int source) const {
    auto it = d_.find({target, source});
    return it == d_.end() ? zero_ : it->second;
}

void HomologySummary::canonicalize() {
    std::sort(towers.begin(), towers.end());
    std::sort(torsion.begin(), torsion.end());
}

std::string HomologySummary::to_text() const {
    // (h, q, kind, ord); towers sort before torsion at equal (h, q)
    std::vector<std::tuple<int, int, int, int>> keys;
    for (const auto &t : towers) keys.emplace_back(t.h, t.q, 0, 0);
    for (const auto &t : torsion) keys.emplace_back(t.h, t.q, 1, t.ord);
    std::sort(keys.begin(), keys.end());
    std::ostringstream os;
    for (const auto &[h, q, kind, ord] : keys) {
        if (kind == 0)
            os << "tower h=" << h << " q=" << q << "\n";
        else
            os << "torsion h=" << h << " q=" << q << " ord=" << ord << "\n";
    }
    return os.str();
}

std::string ComplexValidation::to_string() const {
    if (ok()) return "valid\n";
    std::ostringstream os;
    for (const auto &m : homogeneity) os << "homogeneity: " << m << "\n";
    for (const auto &m : d_squared) os << "d^2: " << m << "\n";
    return os.str();
}

ComplexValidation validate_complex(const FreeBigradedComplex &c) {
    ComplexValidation rep;
    for (const auto &[key, p] : c.entries()) {
        auto [j, i] = key;
        Bigrading src = c.grading(i), tgt = c.grading(j);
        std::ostringstream where;
        where << "entry (" << j << " <- " << i << ") = " << p.to_string() << ", gradings (" << src.h
              << "," << src.q << ") -> (" << tgt.h << "," << tgt.q << ")";
        if (tgt.h != src.h + 1) {
            rep.homogeneity.push_back(where.str() + ": target h must be source h + 1");
            continue;
        }
        int diff = tgt.q - src.q;
        if (diff < 0 || diff % 2 != 0 || !p.is_monomial() || p.degree() != diff / 2)
            rep.homogeneity.push_back(where.str() + ": expected monomial of H-degree (q_target - q_source)/2");
    }

    // d^2 per source generator, sparsely
    std::vector<std::vector<std::pair<int, const Poly *>>> out(static_cast<size_t>(c.size()));
    for (const auto &[key, p] : c.entries()) out[static_cast<size_t>(key.second)].emplace_back(key.first, &p);
    for (int x = 0; x < c.size(); ++x) {
        std::map<int, Poly> acc;
        for (const auto &[y, pyx] : out[static_cast<size_t>(x)])
            for (const auto &[z, pzy] : out[static_cast<size_t>(y)]) {
                auto it = acc.find(z);
                if (it == acc.end())
                    acc.emplace(z, *pzy * *pyx);
                else
                    it->second += *pzy * *pyx;
            }
        for (const auto &[z, p] : acc)
            if (!p.is_zero()) {
                std::ostringstream os;
                os << "entry (" << z << " <- " << x << ") = " << p.to_string();
                rep.d_squared.push_back(os.str());
            }
    }
    return rep;
}

namespace {

// Differential as twin adjacency maps; out[src][tgt] == in[tgt][src].
struct SparseDiff {
    std::vector<std::map<int, Poly>> out, in;
    std::vector<char> alive;

    explicit SparseDiff(const FreeBigradedComplex &c)
        : out(static_cast<size_t>(c.size())), in(static_cast<size_t>(c.size())),
          alive(static_cast<size_t>(c.size()), 1) {
        for (const auto &[key, p] : c.entries()) {
            out[static_cast<size_t>(key.second)].emplace(key.first, p);
            in[static_cast<size_t>(key.first)].emplace(key.second, p);
        }
    }

    void drop(int g) {
        for (const auto &[t, p] : out[static_cast<size_t>(g)]) in[static_cast<size_t>(t)].erase(g);
        for (const auto &[s, p] : in[static_cast<size_t>(g)]) out[static_cast<size_t>(s)].erase(g);
        out[static_cast<size_t>(g)].clear();
        in[static_cast<size_t>(g)].clear();
        alive[static_cast<size_t>(g)] = 0;
    }
};

// Cancel every edge carrying a unit (degree-0) coefficient. Gaussian
// elimination on (x -> y) with unit u rewrites d[b][a] -= d[b][x]·u⁻¹·d[y][a]
// and removes x, y; this preserves homology and keeps entries monomial.
void cancel_units(SparseDiff &sd) {
    std::deque<std::pair<int, int>> work;  // (target, source)
    for (size_t x = 0; x < sd.out.size(); ++x)
        for (const auto &[y, p] : sd.out[x])
            if (p.degree() == 0) work.emplace_back(y, static_cast<int>(x));

    while (!work.empty()) {
        auto [y, x] = work.front();
        work.pop_front();
        if (!sd.alive[static_cast<size_t>(y)] || !sd.alive[static_cast<size_t>(x)]) continue;
        auto it = sd.out[static_cast<size_t>(x)].find(y);
        if (it == sd.out[static_cast<size_t>(x)].end() || it->second.degree() != 0) continue;
        FieldElem uinv = it->second.coeff(0).inverse();

        std::vector<std::pair<int, Poly>> row(sd.in[static_cast<size_t>(y)].begin(),
                                              sd.in[static_cast<size_t>(y)].end());
        std::vector<std::pair<int, Poly>> col(sd.out[static_cast<size_t>(x)].begin(),
                                              sd.out[static_cast<size_t>(x)].end());
        sd.drop(x);
        sd.drop(y);

        for (const auto &[a, pya] : row) {
            if (a == x) continue;
            for (const auto &[b, pbx] : col) {
                if (b == y) continue;
                Poly upd = pbx * uinv * pya;
                auto &oa = sd.out[static_cast<size_t>(a)];
                auto oit = oa.find(b);
                if (oit == oa.end()) {
                    upd = -upd;
                    oa.emplace(b, upd);
                    sd.in[static_cast<size_t>(b)].emplace(a, upd);
                } else {
                    oit->second -= upd;
                    if (oit->second.is_zero()) {
                        oa.erase(oit);
                        sd.in[static_cast<size_t>(b)].erase(a);
                        continue;
                    }
                    sd.in[static_cast<size_t>(b)][a] = oit->second;
                    upd = oit->second;
                }
                if (!upd.is_zero() && upd.degree() == 0) work.emplace_back(b, a);
            }
        }
    }
}

}  // namespace

HomologySummary free_homology(const FreeBigradedComplex &c) {
    ComplexValidation rep = validate_complex(c);
    if (!rep.ok()) {
        const std::string &first = rep.homogeneity.empty() ? rep.d_squared.front() : rep.homogeneity.front();
        throw std::invalid_argument("invalid complex: " + first);
    }

    SparseDiff sd(c);
    cancel_units(sd);

    // Surviving generators per homological grading, in index order.
    std::map<int, std::vector<int>> level;
    for (int g = 0; g < c.size(); ++g)
        if (sd.alive[static_cast<size_t>(g)]) level[c.grading(g).h].push_back(g);

    FieldChar ch = c.characteristic();
    auto build = [&](const std::vector<int> &tgts, const std::vector<int> &srcs) {
        PolyMatrix m(ch, static_cast<int>(tgts.size()), static_cast<int>(srcs.size()));
        std::map<int, int> tpos;
        for (size_t r = 0; r < tgts.size(); ++r) tpos[tgts[r]] = static_cast<int>(r);
        for (size_t cidx = 0; cidx < srcs.size(); ++cidx)
            for (const auto &[t, p] : sd.out[static_cast<size_t>(srcs[cidx])])
                m.at(tpos.at(t), static_cast<int>(cidx)) = p;
        return m;
    };
    auto qs = [&](const std::vector<int> &gs) {
        std::vector<int> v;
        v.reserve(gs.size());
        for (int g : gs) v.push_back(c.grading(g).q);
        return v;
    };
    static const std::vector<int> kEmpty;
    auto at_level = [&](int h) -> const std::vector<int> & {
        auto it = level.find(h);
        return it == level.end() ? kEmpty : it->second;
    };

    HomologySummary out;
    for (const auto &[h, gens] : level) {
        const std::vector<int> &above = at_level(h + 1);
        const std::vector<int> &below = at_level(h - 1);

        SnfResult fwd = snf_graded(build(above, gens), qs(above), qs(gens));
        int m = static_cast<int>(gens.size());
        int kdim = m - fwd.rank;
        if (kdim == 0) continue;

        // Image of the incoming differential in kernel coordinates: rows of
        // V⁻¹·d_{h-1} past the rank (earlier rows must vanish).
        PolyMatrix expr = fwd.v_inv * build(gens, below);
        for (int r = 0; r < fwd.rank; ++r)
            for (int j = 0; j < expr.cols(); ++j)
                if (!expr.at(r, j).is_zero())
                    throw std::logic_error("incoming differential not contained in kernel");
        PolyMatrix k(ch, kdim, expr.cols());
        std::vector<int> kgrades(fwd.col_grades.begin() + fwd.rank, fwd.col_grades.end());
        for (int r = 0; r < kdim; ++r)
            for (int j = 0; j < expr.cols(); ++j) k.at(r, j) = expr.at(fwd.rank + r, j);

        SnfResult quot = snf_graded(k, kgrades, qs(below));
        for (int i = 0; i < quot.rank; ++i) {
            int ord = quot.s.at(i, i).degree();
            if (ord > 0) out.torsion.push_back({h, quot.row_grades[i], ord});
        }
        for (int i = quot.rank; i < kdim; ++i) out.towers.push_back({h, quot.row_grades[i]});
    }
    out.canonicalize();
    return out;
}

std::map<int, int> homology_dims_at_h1(const FreeBigradedComplex &c) {
    FieldChar ch = c.characteristic();
    FreeBigradedComplex flat(ch);
    for (int g = 0; g < c.size(); ++g) flat.add_generator(c.grading(g));
    FieldElem one = field_one(ch);
    for (const auto &[key, p] : c.entries()) {
        FieldElem v = p.eval(one);
        if (!v.is_zero()) flat.add_entry(key.first, key.second, Poly(ch, std::vector<FieldElem>{v}));
    }

    SparseDiff sd(flat);
    cancel_units(sd);
    std::map<int, int> dims;
    for (int g = 0; g < flat.size(); ++g)
        if (sd.alive[static_cast<size_t>(g)]) {
            if (!sd.out[static_cast<size_t>(g)].empty() || !sd.in[static_cast<size_t>(g)].empty())
                throw std::logic_error("scalar reduction left a nonzero differential");
            ++dims[flat.grading(g).h];
        }
    return dims;
}

}  // namespace bnkit

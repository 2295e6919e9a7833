#include "bnkit/type_d.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace bnkit {

void TypeDStructure::canonicalize() {
    std::sort(generators.begin(), generators.end(), [](const TypeDGenerator &a, const TypeDGenerator &b) {
        return std::tie(a.gr.h, a.gr.q, a.id) < std::tie(b.gr.h, b.gr.q, b.id);
    });
    std::sort(arrows.begin(), arrows.end(), [](const TypeDArrow &a, const TypeDArrow &b) {
        return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
    });
}

const TypeDGenerator *TypeDStructure::find(const std::string &id) const {
    for (const auto &g : generators)
        if (g.id == id) return &g;
    return nullptr;
}

std::vector<std::string> validate(const TypeDStructure &t) {
    std::vector<std::string> issues;
    std::map<std::string, const TypeDGenerator *> byid;
    for (const auto &g : t.generators) {
        if (!byid.emplace(g.id, &g).second) issues.push_back("duplicate generator id '" + g.id + "'");
    }

    for (const auto &a : t.arrows) {
        auto si = byid.find(a.src), di = byid.find(a.dst);
        if (si == byid.end() || di == byid.end()) {
            issues.push_back("arrow " + a.src + " -> " + a.dst + " references an undeclared generator");
            continue;
        }
        const TypeDGenerator &s = *si->second, &d = *di->second;
        std::string where = "arrow " + a.src + " -> " + a.dst;
        if (a.label.is_zero()) {
            issues.push_back(where + ": zero label");
            continue;
        }
        if (a.label.characteristic() != t.characteristic)
            issues.push_back(where + ": label characteristic mismatch");
        for (const auto &[p, coeff] : a.label.terms()) {
            (void)coeff;
            if (p.start != s.idem || p.end() != d.idem) {
                issues.push_back(where + ": term " + element_to_text(AlgebraElement(t.characteristic, p)) +
                                 " is not idempotent-compatible");
                continue;
            }
            Bigrading gp = grading(p);
            if (d.gr.h != s.gr.h + 1 || d.gr.q != s.gr.q - gp.q)
                issues.push_back(where + ": grading convention violated by term " +
                                 element_to_text(AlgebraElement(t.characteristic, p)));
        }
    }
    if (!issues.empty()) return issues;

    // delta^2: for every composable pair of arrows, the labels multiply to 0.
    for (const auto &a1 : t.arrows)
        for (const auto &a2 : t.arrows) {
            if (a1.dst != a2.src) continue;
            AlgebraElement prod = mul(a2.label, a1.label);
            if (!prod.is_zero())
                issues.push_back("delta^2 != 0 along " + a1.src + " -> " + a1.dst + " -> " + a2.dst +
                                 ": product " + element_to_text(prod));
        }
    return issues;
}

namespace {

// Label of the i-th arrow (0-based) in the n > 0 pattern S, D, SS, D, SS, ...
AlgebraElement positive_label(int i, FieldChar c) {
    if (i == 0) return AlgebraElement(c, BasisPath::sword(Vertex::Dot, 1));
    if (i % 2 == 1) return AlgebraElement(c, BasisPath::dpow(Vertex::Circle, 1));
    return AlgebraElement(c, BasisPath::sword(Vertex::Circle, 2));
}

// Mirrored pattern for n < 0: chain of circles into the final dot, labels
// ..., D, SS, D, S (the j-th is the (m-1-j)-th positive one moved to circle).
AlgebraElement negative_label(int j, int m, FieldChar c) {
    int i = m - 1 - j;
    if (i == 0) return AlgebraElement(c, BasisPath::sword(Vertex::Circle, 1));
    if (i % 2 == 1) return AlgebraElement(c, BasisPath::dpow(Vertex::Circle, 1));
    return AlgebraElement(c, BasisPath::sword(Vertex::Circle, 2));
}

std::string gen_id(int i) { return "g" + std::to_string(i); }

}  // namespace

TypeDStructure build_qn(int n, FieldChar c) {
    TypeDStructure t{c, {}, {}};
    if (n == 0) {
        t.generators.push_back({gen_id(0), Vertex::Dot, {0, 0}});
        return t;
    }
    if (n > 0) {
        t.generators.push_back({gen_id(0), Vertex::Dot, {0, n}});
        for (int i = 0; i < n; ++i) {
            AlgebraElement label = positive_label(i, c);
            Bigrading prev = t.generators.back().gr;
            int q_label = grading(label.terms().begin()->first).q;
            t.generators.push_back({gen_id(i + 1), Vertex::Circle, {prev.h + 1, prev.q - q_label}});
            t.arrows.push_back({gen_id(i), gen_id(i + 1), label});
        }
    } else {
        int m = -n;
        // Anchor the dot at (0, n) and propagate q backwards along the chain.
        std::vector<AlgebraElement> labels;
        for (int j = 0; j < m; ++j) labels.push_back(negative_label(j, m, c));
        std::vector<Bigrading> grs(static_cast<size_t>(m) + 1);
        grs[static_cast<size_t>(m)] = {0, n};
        for (int j = m - 1; j >= 0; --j) {
            int q_label = grading(labels[static_cast<size_t>(j)].terms().begin()->first).q;
            grs[static_cast<size_t>(j)] = {grs[static_cast<size_t>(j + 1)].h - 1,
                                           grs[static_cast<size_t>(j + 1)].q + q_label};
        }
        for (int j = 0; j <= m; ++j)
            t.generators.push_back({gen_id(j), j == m ? Vertex::Dot : Vertex::Circle, grs[static_cast<size_t>(j)]});
        for (int j = 0; j < m; ++j) t.arrows.push_back({gen_id(j), gen_id(j + 1), labels[static_cast<size_t>(j)]});
    }
    t.canonicalize();
    return t;
}

TypeDStructure shift(const TypeDStructure &t, int dh, int dq) {
    TypeDStructure out = t;
    for (auto &g : out.generators) {
        g.gr.h += dh;
        g.gr.q += dq;
    }
    return out;
}

namespace {

// Walks a structure that is a single chain (every generator with at most one
// in- and out-arrow, one source, connected). Returns generator pointers in
// chain order and the arrows between them, or nullopt.
struct Chain {
    std::vector<const TypeDGenerator *> gens;
    std::vector<const TypeDArrow *> arrows;
};

std::optional<Chain> as_chain(const TypeDStructure &t) {
    std::map<std::string, const TypeDArrow *> out, in;
    for (const auto &a : t.arrows) {
        if (!t.find(a.src) || !t.find(a.dst)) return std::nullopt;
        if (!out.emplace(a.src, &a).second) return std::nullopt;
        if (!in.emplace(a.dst, &a).second) return std::nullopt;
    }
    const TypeDGenerator *head = nullptr;
    for (const auto &g : t.generators)
        if (!in.count(g.id)) {
            if (head) return std::nullopt;
            head = &g;
        }
    if (!head) return std::nullopt;

    Chain ch;
    const TypeDGenerator *cur = head;
    ch.gens.push_back(cur);
    for (;;) {
        auto it = out.find(cur->id);
        if (it == out.end()) break;
        ch.arrows.push_back(it->second);
        cur = t.find(it->second->dst);
        ch.gens.push_back(cur);
        if (ch.gens.size() > t.generators.size()) return std::nullopt;  // cycle
    }
    if (ch.gens.size() != t.generators.size()) return std::nullopt;  // disconnected
    return ch;
}

}  // namespace

std::optional<RationalMatch> identify_rational(const TypeDStructure &t) {
    auto ch = as_chain(t);
    if (!ch) return std::nullopt;

    int dots = 0;
    for (const auto *g : ch->gens) dots += g->idem == Vertex::Dot ? 1 : 0;
    if (dots != 1) return std::nullopt;

    int m = static_cast<int>(ch->arrows.size());
    int n;
    if (m == 0) {
        n = 0;
        if (ch->gens.front()->idem != Vertex::Dot) return std::nullopt;
    } else if (ch->gens.front()->idem == Vertex::Dot) {
        n = m;
    } else if (ch->gens.back()->idem == Vertex::Dot) {
        n = -m;
    } else {
        return std::nullopt;
    }

    TypeDStructure tmpl = build_qn(n, t.characteristic);
    auto tch = as_chain(tmpl);
    int dh = ch->gens.front()->gr.h - tch->gens.front()->gr.h;
    int dq = ch->gens.front()->gr.q - tch->gens.front()->gr.q;
    for (size_t i = 0; i < ch->gens.size(); ++i) {
        if (ch->gens[i]->idem != tch->gens[i]->idem) return std::nullopt;
        if (ch->gens[i]->gr.h != tch->gens[i]->gr.h + dh) return std::nullopt;
        if (ch->gens[i]->gr.q != tch->gens[i]->gr.q + dq) return std::nullopt;
    }
    for (size_t i = 0; i < ch->arrows.size(); ++i)
        if (!(ch->arrows[i]->label == tch->arrows[i]->label)) return std::nullopt;
    return RationalMatch{n, dh, dq};
}

int theta_of_rational(const TypeDStructure &t) {
    auto m = identify_rational(t);
    if (!m)
        throw std::invalid_argument("not a rational structure: " + std::to_string(t.generators.size()) +
                                    " generators / " + std::to_string(t.arrows.size()) +
                                    " arrows do not match any twist-chain template");
    return m->n;
}

std::string serialize_typed(const TypeDStructure &t) {
    TypeDStructure c = t;
    c.canonicalize();
    std::ostringstream os;
    os << "typed v1\n";
    os << "char " << c.characteristic.to_string() << "\n";
    for (const auto &g : c.generators)
        os << "gen " << g.id << " idem=" << vertex_mark(g.idem) << " h=" << g.gr.h << " q=" << g.gr.q
           << "\n";
    for (const auto &a : c.arrows)
        os << "arrow " << a.src << " -> " << a.dst << " label=" << element_to_text(a.label) << "\n";
    return os.str();
}

namespace {

struct LineScanner {
    const std::string &s;
    int line;
    size_t pos = 0;

    ParseError fail(const std::string &expected) const {
        return ParseError(line, static_cast<int>(pos) + 1, expected);
    }
    void skip() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip();
        return pos >= s.size();
    }
    // Next whitespace-delimited word.
    std::string word(const std::string &expected) {
        skip();
        size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw fail(expected);
        return s.substr(start, pos - start);
    }
    void literal(const std::string &text) {
        skip();
        if (s.compare(pos, text.size(), text) != 0) throw fail("'" + text + "'");
        pos += text.size();
    }
    int integer(const std::string &expected) {
        skip();
        size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (s[start] == '-' && pos == start + 1)) throw fail(expected);
        return std::stoi(s.substr(start, pos - start));
    }
};

}  // namespace

TypeDStructure parse_typed(const std::string &text) {
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string l;
        while (std::getline(is, l)) lines.push_back(l);
    }
    auto content = [](std::string l) {
        size_t hash = l.find('#');
        if (hash != std::string::npos) l.erase(hash);
        return l;
    };

    size_t i = 0;
    auto next_line = [&]() -> std::optional<size_t> {
        while (i < lines.size()) {
            std::string c = content(lines[i]);
            if (c.find_first_not_of(" \t\r") != std::string::npos) return i++;
            ++i;
        }
        return std::nullopt;
    };

    auto hdr = next_line();
    std::string hdr_text = hdr ? content(lines[*hdr]) : std::string();
    while (!hdr_text.empty() && (hdr_text.back() == '\r' || hdr_text.back() == ' ')) hdr_text.pop_back();
    if (!hdr || hdr_text != "typed v1")
        throw ParseError(hdr ? static_cast<int>(*hdr) + 1 : 1, 1, "'typed v1' header");

    auto ch_line = next_line();
    if (!ch_line) throw ParseError(static_cast<int>(lines.size()) + 1, 1, "'char <c>' line");
    std::string ch_text = content(lines[*ch_line]);
    LineScanner cs{ch_text, static_cast<int>(*ch_line) + 1};
    cs.literal("char");
    int cval = cs.integer("characteristic");
    FieldChar c;
    try {
        c = FieldChar(cval);
    } catch (const std::invalid_argument &) {
        throw cs.fail("prime or zero characteristic");
    }

    TypeDStructure t{c, {}, {}};
    std::map<std::string, size_t> ids;
    std::map<std::pair<std::string, std::string>, bool> seen_arrows;
    bool in_arrows = false;
    while (auto li = next_line()) {
        std::string l = content(lines[*li]);
        while (!l.empty() && l.back() == '\r') l.pop_back();
        LineScanner sc{l, static_cast<int>(*li) + 1};
        std::string kw = sc.word("'gen' or 'arrow'");
        if (kw == "gen") {
            if (in_arrows) throw sc.fail("no 'gen' lines after 'arrow' lines");
            std::string id = sc.word("generator id");
            sc.literal("idem=");
            sc.skip();
            if (sc.pos >= l.size() || (l[sc.pos] != '.' && l[sc.pos] != 'o')) throw sc.fail("'.' or 'o'");
            Vertex v = l[sc.pos] == '.' ? Vertex::Dot : Vertex::Circle;
            ++sc.pos;
            sc.literal("h=");
            int h = sc.integer("integer h");
            sc.literal("q=");
            int q = sc.integer("integer q");
            if (!sc.at_end()) throw sc.fail("end of line");
            if (!ids.emplace(id, t.generators.size()).second) throw sc.fail("unique generator id");
            t.generators.push_back({id, v, {h, q}});
        } else if (kw == "arrow") {
            in_arrows = true;
            std::string src = sc.word("source generator id");
            sc.literal("->");
            std::string dst = sc.word("target generator id");
            if (!ids.count(src) || !ids.count(dst)) throw sc.fail("declared generator id");
            sc.literal("label=");
            std::string rest = l.substr(sc.pos);
            AlgebraElement label = parse_element(rest, c, static_cast<int>(*li) + 1,
                                                 static_cast<int>(sc.pos) + 1);
            if (!seen_arrows.emplace(std::make_pair(src, dst), true).second)
                throw sc.fail("unique (src, dst) arrow");
            t.arrows.push_back({src, dst, label});
        } else {
            throw ParseError(static_cast<int>(*li) + 1, 1, "'gen' or 'arrow'");
        }
    }
    t.canonicalize();
    return t;
}

}  // namespace bnkit

#include "bnkit/figures.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "bnkit/mor.hpp"
#include "bnkit/type_d.hpp"

namespace bnkit {

namespace {

std::string atom_str(const BasisPath &p) {
    switch (p.kind) {
        case BasisPath::Kind::Idem: return std::string("1") + vertex_mark(p.start);
        case BasisPath::Kind::Dpow: return "D^" + std::to_string(p.len) + vertex_mark(p.start);
        case BasisPath::Kind::Sword: return "S^" + std::to_string(p.len) + vertex_mark(p.start);
    }
    return "?";
}

std::string edge_mark(const Poly &p) {
    if (p.degree() == 0) return "unit";
    if (p.degree() == 1) return "xH";
    return "xH^" + std::to_string(p.degree());
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string rat_str(long long num, long long den) {
    // normalized exact fraction text, q/1 printed as q
    long long g = std::abs(num);
    long long h = std::abs(den);
    while (h) {
        long long t = g % h;
        g = h;
        h = t;
    }
    if (g == 0) g = 1;
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

std::string emit_grid(int n, FieldChar c, GridFormat format) {
    if (n % 2 != 0) throw std::invalid_argument("grid output needs an even twist count");
    if (std::abs(n) > 12) throw std::invalid_argument("grid output guarded at |n| <= 12");

    TypeDStructure dot{c, {{"g0", Vertex::Dot, {0, 0}}}, {}};
    std::vector<MorGenerator> basis;
    FreeBigradedComplex cx = mor_complex(dot, build_qn(n, c), &basis);

    std::vector<std::tuple<int, int, Poly>> edges;  // (src, dst, coeff)
    for (const auto &[key, p] : cx.entries()) edges.emplace_back(key.second, key.first, p);
    std::sort(edges.begin(), edges.end(), [](const auto &a, const auto &b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });

    if (format == GridFormat::Tsv) {
        std::ostringstream os;
        for (int g = 0; g < cx.size(); ++g) {
            Bigrading gr = cx.grading(g);
            os << "gen\t" << g << "\t" << gr.h << "\t" << gr.q << "\t"
               << atom_str(basis[static_cast<size_t>(g)].atom) << "\n";
        }
        for (const auto &[src, dst, p] : edges)
            os << "edge\t" << src << "\t" << dst << "\t" << p.to_string() << "\t" << edge_mark(p) << "\n";
        return os.str();
    }
    if (format != GridFormat::Svg) throw std::invalid_argument("unsupported grid format");

    int hmin = 0, hmax = 0, qmax = 0;
    for (int g = 0; g < cx.size(); ++g) {
        hmin = std::min(hmin, cx.grading(g).h);
        hmax = std::max(hmax, cx.grading(g).h);
        qmax = std::max(qmax, cx.grading(g).q);
    }
    std::map<std::pair<int, int>, int> stack;  // gens already placed at (h, q)
    std::vector<std::pair<int, int>> at(static_cast<size_t>(cx.size()));  // pixel position
    std::ostringstream os;
    int width = (hmax - hmin + 2) * 150;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"640\" "
       << "font-family=\"monospace\" font-size=\"12\">\n";
    os << "<text x=\"10\" y=\"20\">Mor grid n=" << n << " c=" << c.to_string() << "</text>\n";
    for (int g = 0; g < cx.size(); ++g) {
        Bigrading gr = cx.grading(g);
        int k = stack[{gr.h, gr.q}]++;
        int x = (gr.h - hmin) * 150 + 60;
        int y = (qmax - gr.q) * 26 + 60 + k * 13;
        at[static_cast<size_t>(g)] = {x, y};
        os << "<text x=\"" << x << "\" y=\"" << y << "\">(" << gr.h << "," << gr.q << ") "
           << atom_str(basis[static_cast<size_t>(g)].atom) << "</text>\n";
    }
    for (const auto &[src, dst, p] : edges) {
        auto [x1, y1] = at[static_cast<size_t>(src)];
        auto [x2, y2] = at[static_cast<size_t>(dst)];
        os << "<line x1=\"" << x1 + 90 << "\" y1=\"" << y1 - 4 << "\" x2=\"" << x2 - 6 << "\" y2=\""
           << y2 - 4 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << (x1 + x2) / 2 + 40 << "\" y=\"" << (y1 + y2) / 2 - 8 << "\">"
           << edge_mark(p) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string curve_lift_data(int n) {
    std::ostringstream os;
    // y = 1/8 + n(x - 1/4), endpoints at x = -2 and x = 2:
    // y(-2) = (1 - 18n)/8, y(2) = (1 + 14n)/8
    os << "line\t" << rat_str(-2, 1) << "\t" << rat_str(1 - 18ll * n, 8) << "\t" << rat_str(2, 1)
       << "\t" << rat_str(1 + 14ll * n, 8) << "\n";
    os << "slope\t" << n << "\n";
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            os << "puncture\t" << rat_str(a, 2) << "\t" << rat_str(b, 2) << "\n";
    return os.str();
}

std::string curve_lift_svg(int n) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" "
       << "viewBox=\"-2.6 -2.6 5.2 5.2\">\n";
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            os << "<circle cx=\"" << fmt(a / 2.0) << "\" cy=\"" << fmt(-b / 2.0)
               << "\" r=\"0.06\" fill=\"white\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
    // clip the line y = 1/8 + n(x - 1/4) to the viewBox
    double x0 = -2.5, x1 = 2.5;
    if (n != 0) {
        double xa = (-2.5 - 0.125) / n + 0.25, xb = (2.5 - 0.125) / n + 0.25;
        x0 = std::max(x0, std::min(xa, xb));
        x1 = std::min(x1, std::max(xa, xb));
    }
    auto yOf = [n](double x) { return 0.125 + n * (x - 0.25); };
    os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(-yOf(x0)) << "\" x2=\"" << fmt(x1)
       << "\" y2=\"" << fmt(-yOf(x1)) << "\" stroke=\"black\" stroke-width=\"0.03\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace bnkit

// bnkit: reduced Bar-Natan homology of 2-strand tangle closures, two ways.
//
// Exit codes: 0 success, 1 verification failure (invalid structure,
// non-rational theta input, failed suite, oracle mismatch), 2 usage or
// parse errors.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bnkit/cube.hpp"
#include "bnkit/figures.hpp"
#include "bnkit/mor.hpp"
#include "bnkit/type_d.hpp"
#include "bnkit/verify.hpp"

using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << text;
}

ordered_json summary_json(const bnkit::HomologySummary &s) {
    ordered_json towers = ordered_json::array();
    for (const auto &t : s.towers) towers.push_back(ordered_json{{"h", t.h}, {"q", t.q}});
    ordered_json torsion = ordered_json::array();
    for (const auto &t : s.torsion)
        torsion.push_back(ordered_json{{"h", t.h}, {"q", t.q}, {"ord", t.ord}});
    return ordered_json{{"towers", towers}, {"torsion", torsion}};
}

void print_summary(const bnkit::HomologySummary &s, bool json, ordered_json extra) {
    if (json) {
        ordered_json out = std::move(extra);
        out.update(summary_json(s));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << s.to_text();
    }
}

bnkit::VerificationReport pairing_report(int range, bnkit::FieldChar c) {
    bnkit::VerificationReport rep;
    rep.suite = "pairing";
    rep.characteristic = c.to_string();
    for (int n = -range; n <= range; ++n) {
        bnkit::OracleComparison cmp = bnkit::compare_pairing_oracle(n, c);
        bnkit::VerificationCase vc;
        vc.key = "n=" + std::to_string(n);
        vc.n = n;
        vc.expected = "pairing and oracle summaries identical";
        vc.found = cmp.pass ? "identical" : cmp.diff;
        vc.pass = cmp.pass;
        rep.cases.push_back(std::move(vc));
    }
    return rep;
}

int emit_reports(const std::vector<bnkit::VerificationReport> &reps, bool json) {
    if (json) {
        std::string out = "[\n";
        for (size_t i = 0; i < reps.size(); ++i) {
            std::string r = reps[i].to_json();
            while (!r.empty() && r.back() == '\n') r.pop_back();
            out += r;
            out += i + 1 < reps.size() ? ",\n" : "\n";
        }
        out += "]\n";
        std::cout << out;
    } else {
        for (const auto &r : reps) std::cout << r.to_text() << "\n";
    }
    for (const auto &r : reps)
        if (!r.pass()) return 1;
    return 0;
}

std::vector<bnkit::FieldChar> to_chars(const std::vector<std::int64_t> &raw) {
    std::vector<bnkit::FieldChar> out;
    for (std::int64_t v : raw) out.emplace_back(v);
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"reduced Bar-Natan homology of 2-strand tangle closures"};
    app.require_subcommand(1);

    std::string in_path, out_path, svg_path, tsv_path;
    int n = 0, range = 0;
    std::int64_t cval = 0;
    std::vector<std::int64_t> clist;
    bool json = false, oracle = false;

    auto *validate = app.add_subcommand("validate", "check a typed v1 file");
    validate->add_option("file", in_path, "structure file")->required();

    auto *qtangle = app.add_subcommand("qtangle", "emit the rational structure Q_n");
    qtangle->add_option("-n", n, "twist parameter")->required();
    qtangle->add_option("-c", cval, "field characteristic (0 or prime)");
    qtangle->add_option("-o", out_path, "output file (default stdout)");

    auto *closure = app.add_subcommand("closure", "reduced homology of a tangle closure");
    closure->add_option("file", in_path, "structure file");
    closure->add_option("-n", n, "use Q_n instead of a file");
    closure->add_option("-c", cval, "field characteristic (0 or prime)");
    closure->add_flag("--json", json, "machine-readable output");

    auto *torus = app.add_subcommand("torus", "reduced homology of the torus link T(2,n)");
    torus->add_option("-n", n, "number of half twists")->required();
    torus->add_option("-c", cval, "field characteristic (0 or prime)");
    torus->add_flag("--oracle", oracle, "cross-check against the cube oracle");
    torus->add_flag("--json", json, "machine-readable output");

    auto *theta = app.add_subcommand("theta", "slope invariant of a rational structure");
    theta->add_option("file", in_path, "structure file")->required();

    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    auto *vlemma = verify->add_subcommand("lemma", "tower-grading lemma witness");
    auto *vtheorem = verify->add_subcommand("theorem", "main-theorem witness");
    auto *vpairing = verify->add_subcommand("pairing", "pairing vs cube oracle");
    for (auto *sub : {vlemma, vtheorem, vpairing}) {
        sub->add_option("-N,--range", range, "largest |n| covered");
        sub->add_option("-c", clist, "characteristics to cover")->delimiter(',');
        sub->add_flag("--json", json, "machine-readable output");
    }

    auto *grid = app.add_subcommand("grid", "morphism-complex grid figure");
    grid->add_option("-n", n, "twist parameter (even)")->required();
    grid->add_option("-c", cval, "field characteristic (0 or prime)");
    grid->add_option("--svg", svg_path, "SVG output path");
    grid->add_option("--tsv", tsv_path, "TSV output path");

    auto *lift = app.add_subcommand("lift", "curve lift figure");
    lift->add_option("-n", n, "slope")->required();
    lift->add_option("--svg", svg_path, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        bnkit::FieldChar c(cval);

        if (app.got_subcommand(validate)) {
            bnkit::TypeDStructure t = bnkit::parse_typed(read_file(in_path));
            std::vector<std::string> issues = bnkit::validate(t);
            for (const auto &s : issues) std::cout << s << "\n";
            if (!issues.empty()) return 1;
            std::cout << "valid: " << t.generators.size() << " generators, " << t.arrows.size()
                      << " arrows, char " << t.characteristic.to_string() << "\n";
            return 0;
        }

        if (app.got_subcommand(qtangle)) {
            std::string text = bnkit::serialize_typed(bnkit::build_qn(n, c));
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
            return 0;
        }

        if (app.got_subcommand(closure)) {
            bool from_file = closure->count("file") > 0;
            if (from_file == (closure->count("-n") > 0))
                throw std::invalid_argument("closure needs a file or -n, not both");
            bnkit::TypeDStructure t =
                from_file ? bnkit::parse_typed(read_file(in_path)) : bnkit::build_qn(n, c);
            if (from_file && closure->count("-c") > 0 && t.characteristic != c)
                throw std::invalid_argument("-c disagrees with the file's characteristic");
            ordered_json extra{{"characteristic", t.characteristic.value()}};
            if (!from_file) extra["n"] = n;
            print_summary(bnkit::reduced_bn_of_closure(t), json, std::move(extra));
            return 0;
        }

        if (app.got_subcommand(torus)) {
            bnkit::HomologySummary s = bnkit::torus_link_bn(n, c);
            bnkit::OracleComparison cmp;
            cmp.pass = true;
            if (oracle) cmp = bnkit::compare_pairing_oracle(n, c);
            ordered_json extra{{"n", n}, {"characteristic", c.value()}};
            if (oracle) extra["oracle_match"] = cmp.pass;
            print_summary(s, json, std::move(extra));
            if (oracle && !json) std::cout << (cmp.pass ? "oracle match\n" : cmp.diff);
            return cmp.pass ? 0 : 1;
        }

        if (app.got_subcommand(theta)) {
            bnkit::TypeDStructure t = bnkit::parse_typed(read_file(in_path));
            std::optional<bnkit::RationalMatch> m = bnkit::identify_rational(t);
            if (!m) {
                std::cout << "not a rational structure\n";
                return 1;
            }
            std::cout << "rational: n=" << m->n << " shift=(" << m->dh << "," << m->dq << ")\n";
            std::cout << "theta = " << bnkit::theta_of_rational(t) << "\n";
            return 0;
        }

        if (app.got_subcommand(verify)) {
            std::vector<bnkit::FieldChar> chars =
                clist.empty() ? to_chars({0, 2, 3}) : to_chars(clist);
            std::vector<bnkit::VerificationReport> reps;
            if (verify->got_subcommand(vlemma)) {
                if (range == 0) range = 8;
                for (auto fc : chars) reps.push_back(bnkit::verify_lemma_towers(range, fc));
            } else if (verify->got_subcommand(vtheorem)) {
                if (range == 0) range = 10;
                for (auto fc : chars) reps.push_back(bnkit::verify_main_theorem(range, fc));
            } else {
                if (range == 0) range = 8;
                for (auto fc : chars) reps.push_back(pairing_report(range, fc));
            }
            return emit_reports(reps, json);
        }

        if (app.got_subcommand(grid)) {
            if (svg_path.empty() == tsv_path.empty())
                throw std::invalid_argument("grid needs exactly one of --svg, --tsv");
            if (!svg_path.empty())
                write_file(svg_path, bnkit::emit_grid(n, c, bnkit::GridFormat::Svg));
            else
                write_file(tsv_path, bnkit::emit_grid(n, c, bnkit::GridFormat::Tsv));
            return 0;
        }

        if (app.got_subcommand(lift)) {
            write_file(svg_path, bnkit::curve_lift_svg(n));
            return 0;
        }
    } catch (const bnkit::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

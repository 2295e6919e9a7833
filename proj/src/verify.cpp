#include "bnkit/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bnkit/cube.hpp"
#include "bnkit/mor.hpp"
#include "bnkit/type_d.hpp"

namespace bnkit {

bool VerificationReport::pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const VerificationCase &c) { return c.pass; });
}

int VerificationReport::passed_count() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                          [](const VerificationCase &c) { return c.pass; }));
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (c=" << characteristic << ")\n";
    for (const auto &c : cases)
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.key << ": expected " << c.expected
           << "; found " << c.found << "\n";
    os << (pass() ? "PASS" : "FAIL") << " " << passed_count() << "/" << cases.size() << "\n";
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["characteristic"] = characteristic;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto &c : cases) {
        nlohmann::ordered_json jc;
        jc["key"] = c.key;
        jc["n"] = c.n;
        jc["expected"] = c.expected;
        jc["found"] = c.found;
        jc["pass"] = c.pass;
        j["cases"].push_back(jc);
    }
    j["summary"] = {{"total", cases.size()}, {"passed", passed_count()}, {"pass", pass()}};
    return j.dump(2) + "\n";
}

namespace {

std::string tower_h_list(const HomologySummary &s) {
    std::ostringstream os;
    os << "towers at h in {";
    for (size_t i = 0; i < s.towers.size(); ++i) os << (i ? ", " : "") << s.towers[i].h;
    os << "}";
    return os.str();
}

}  // namespace

VerificationReport verify_lemma_towers(int N, FieldChar c) {
    VerificationReport rep{"lemma-towers", c.to_string(), {}};
    for (int n = -N; n <= N; n += 2) {
        HomologySummary pair = torus_link_bn(n, c);
        HomologySummary oracle = free_homology(cbn_complex(torus_diagram(n), c, true));
        int lk = linking_number(torus_diagram(n));

        std::multiset<int> want{0, n}, got_pair, got_oracle;
        for (const auto &t : pair.towers) got_pair.insert(t.h);
        for (const auto &t : oracle.towers) got_oracle.insert(t.h);
        int at_zero = static_cast<int>(got_pair.count(0));
        bool unique_at_zero_ok = (lk != 0) == (at_zero == 1);
        bool ok = got_pair == want && got_oracle == want && unique_at_zero_ok;

        std::ostringstream exp, fnd;
        exp << "towers at h in {0, " << n << "} via both pipelines, "
            << (lk != 0 ? "unique" : "both") << " at h=0 (lk=" << lk << ")";
        fnd << "pairing " << tower_h_list(pair) << ", oracle " << tower_h_list(oracle);
        rep.cases.push_back({"n=" + std::to_string(n), n, exp.str(), fnd.str(), ok});
    }
    std::sort(rep.cases.begin(), rep.cases.end(),
              [](const VerificationCase &a, const VerificationCase &b) { return a.n < b.n; });
    return rep;
}

VerificationReport verify_main_theorem(int N, FieldChar c) {
    VerificationReport rep{"main-theorem", c.to_string(), {}};
    for (int n = -N; n <= N; n += 2) {
        HomologySummary pair = torus_link_bn(n, c);
        bool shared = true;
        for (const auto &t : pair.towers) shared = shared && t.h == pair.towers.front().h;
        bool ok = shared == (n == 0);
        std::ostringstream exp;
        exp << "both towers in one homological grading iff n=0, here "
            << (n == 0 ? "shared" : "split");
        rep.cases.push_back({"n=" + std::to_string(n), n, exp.str(),
                             shared ? "shared grading" : tower_h_list(pair), ok});
    }
    std::sort(rep.cases.begin(), rep.cases.end(),
              [](const VerificationCase &a, const VerificationCase &b) { return a.n < b.n; });

    int theta = theta_of_rational(build_qn(0, c));
    rep.cases.push_back({"theta(Q_0)", 0, "theta of the rational curve = 0",
                         "theta = " + std::to_string(theta), theta == 0});
    return rep;
}

OracleComparison compare_pairing_oracle(int n, FieldChar c) {
    if (std::abs(n) > 12) throw std::invalid_argument("oracle comparison guarded at |n| <= 12");
    OracleComparison cmp;
    cmp.pairing = torus_link_bn(n, c);
    cmp.oracle = free_homology(cbn_complex(torus_diagram(n), c, true));
    cmp.pass = cmp.pairing == cmp.oracle;
    if (!cmp.pass)
        cmp.diff = "pairing:\n" + cmp.pairing.to_text() + "oracle:\n" + cmp.oracle.to_text();
    return cmp;
}

}  // namespace bnkit

// Machine checks of the tower-grading lemma and the main-theorem computation,
// with deterministic report rendering for the CLI.
#pragma once

#include <string>
#include <vector>

#include "bnkit/complex.hpp"
#include "bnkit/field.hpp"

namespace bnkit {

struct VerificationCase {
    std::string key;  // e.g. "n=-4"
    int n = 0;
    std::string expected;
    std::string found;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::string characteristic;
    std::vector<VerificationCase> cases;  // sorted by n (the case key)

    bool pass() const;
    int passed_count() const;
    std::string to_text() const;
    std::string to_json() const;  // stable key order, byte-identical per input
};

// For every even |n| <= N: both pipelines must give towers with homological
// gradings {0, n}, and the tower at h = 0 is unique iff lk != 0.
VerificationReport verify_lemma_towers(int N, FieldChar c);

// For every even |n| <= N: records whether both towers share one homological
// grading; must hold exactly at n = 0. Appends the theta(Q_0) = 0 witness.
VerificationReport verify_main_theorem(int N, FieldChar c);

struct OracleComparison {
    bool pass = false;
    HomologySummary pairing, oracle;
    std::string diff;  // empty when equal
};

// Pairing pipeline vs cube oracle, exact multiset equality of summaries.
OracleComparison compare_pairing_oracle(int n, FieldChar c);

}  // namespace bnkit

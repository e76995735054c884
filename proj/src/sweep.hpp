#pragma once

// Exhaustive verification sweep over small Conway notations: enumerates
// uniform-sign notations up to bounds, computes every invariant by every
// available route, and reports any disagreement.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "braid.hpp"

namespace twobridge {

struct SweepOptions {
    long long max_sum = 10;  // bound on the total number of crossings
    int max_len = 5;         // bound on the notation length before normalization
    bool positive = true;
    bool negative = true;
    // Keep only the first notation per continued-fraction value.
    bool dedup_fraction = false;
};

// All normalized odd-length notations within the bounds, deduplicated and
// sorted; deterministic.
std::vector<Conway> sweep_notations(const SweepOptions& opt);

// Raw per-notation quantities, computed without any built-in cross-checks so
// callers can verify each identity independently.
struct SweepCase {
    Conway notation;  // normalized odd-length form
    bool knot = false;

    // Route-independent data.
    mpz_class det;         // |numerator| of the continued fraction
    mpz_class det_g_abs;   // |det| of the Goeritz matrix
    long long sign_g = 0;  // signature of the Goeritz matrix
    long long closed_sign = 0;

    // Fork automaton.
    bool concentrated = false;  // histogram occupies a single level
    mpz_class count;            // total generators (0 if not concentrated)
    long long r_tilde = 0;
    long long expected_level = 0;  // 0 for positive notations, 1 for negative

    // Knot-only oriented data.
    long long e = 0, w = 0;
    long long mu_one = 0, mu_two = 0;
    long long sigma = 0;
    bool shift_integral = false;  // (e - w - 2) divisible by 4
    long long reduced = 0;        // r_tilde + (e - w - 2)/4
    long long closed_reduced = 0;

    // Mirrored-braid pipeline.
    mpz_class mir_det_abs;
    long long mir_sigma = 0;  // knots only
};

SweepCase analyze_case(const Conway& normalized);

struct SweepSummary {
    long long cases = 0;
    long long knots = 0;
    long long links = 0;
    long long failures = 0;  // notations with at least one failed identity
    std::vector<std::string> messages;  // first few failure descriptions
};

// Runs the sweep and checks every identity on every case.  When `out_cases`
// is non-null the raw per-case data is appended for independent re-checking.
SweepSummary run_sweep(const SweepOptions& opt, std::vector<SweepCase>* out_cases = nullptr);

// The identity checks applied to one case; returns human-readable
// descriptions of any violations (empty = all good).
std::vector<std::string> case_violations(const SweepCase& c);

}  // namespace twobridge

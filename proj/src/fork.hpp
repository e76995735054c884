#pragma once

// Letter-by-letter generator automaton for Conway-form plat braids.
//
// The state tracks three populations living on the first handle arc and the
// auxiliary arc of the fork picture of a two-bridge braid:
//   * interior generators, graded by level,
//   * central intersections on the auxiliary arc, graded by level,
//   * one distinguished endpoint slot: the free end of the moving arc,
//     which sits at one of the first three punctures and may carry either a
//     generator or a central intersection of its own.
// Twist letters transfer counts between the populations; after a full run
// the generator histogram is concentrated at a single level (0 for positive
// notations, 1 for negative ones) and its total equals the determinant.

#include <gmpxx.h>

#include <map>
#include <string>

#include "braid.hpp"

namespace twobridge {

// Histogram of counts per integer grading level.
using GradedCount = std::map<long long, mpz_class>;

enum class Puncture { P1, P2, P3 };
enum class Approach { Above, Below };

// The free end of the moving arc.  At P2 the slot holds a generator at
// `grading` (kept out of `interior`); at P3 it holds a central intersection
// at `grading` (kept out of `central`); at P1 it holds nothing — the
// generator it governs is counted inside `interior` at `grading`.
struct EndpointState {
    Puncture puncture = Puncture::P3;
    Approach approach = Approach::Below;
    long long grading = 0;
};

struct ForkState {
    GradedCount interior;  // generators strictly inside the handle arc
    GradedCount central;   // central intersections away from the endpoint
    EndpointState endpoint;
    int direction = 1;     // +1 for positive notations, -1 for negative

    // Generators: interior plus the endpoint slot when it holds one.
    mpz_class generator_total() const;
    // Histogram of all generators including the endpoint slot's.
    GradedCount generator_histogram() const;
    // Central intersections: bulk plus the endpoint slot when it holds one.
    mpz_class central_total() const;
    GradedCount central_histogram() const;
};

struct ForkRun {
    mpz_class generator_count;
    GradedCount histogram;  // generator histogram after the full word
    long long r_tilde = 0;  // the single occupied level
};

// Seed state for the leading twist bundle sigma_2^{b1}.  Throws
// std::invalid_argument when b1 == 0.
ForkState init_twist(long long b1);

// Inductive steps for positive-notation runs (direction +1).
ForkState apply_sigma1_inv(const ForkState& s);
ForkState apply_sigma2(const ForkState& s);

// Mirrored steps for negative-notation runs (direction -1).
ForkState apply_sigma1(const ForkState& s);
ForkState apply_sigma2_inv(const ForkState& s);

// Runs the automaton over the full Conway word of an odd-length notation.
// When `trace` is non-null, appends one line per letter describing the
// letter applied and the resulting state.
ForkRun run(const Conway& c, std::string* trace = nullptr);

// Human-readable one-line rendering of a state (used by --trace).
std::string describe(const ForkState& s);

}  // namespace twobridge

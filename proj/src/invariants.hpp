#pragma once

// Assembly of the full invariant set for one two-bridge notation, with the
// redundant cross-checks between independently computed routes, plus the
// mirror and connected-sum verification helpers.

#include <gmpxx.h>

#include <json.hpp>
#include <string>

#include "braid.hpp"
#include "diagram.hpp"
#include "fork.hpp"
#include "goeritz.hpp"

namespace twobridge {

// The branched double cover's lens space label.
struct LensSpace {
    mpz_class p;  // order, nonnegative
    mpz_class q;  // in [0, p) for p > 0

    std::string label() const;
};

// L(|num|, q) where q is den mod |num| for positive fractions and
// (-den) mod |num| for negative ones.
LensSpace lens_space(const mpq_class& fraction);

// Everything the diagram side yields for one plat word.
struct PlatAnalysis {
    PlanarDiagram d;
    OrientedDiagram o;
    ColoredDiagram col;
    CrossingStats stats;
    IntMatrix g;
    long long sign_g = 0;
    mpz_class det_g;
    long long sigma = 0;  // sign_g - mu_two; always even for knots
};

// Runs orientation, coloring, crossing classification, and the Goeritz form
// on an arbitrary diagram (throws LinkError when it is not a knot, and
// ConventionError when the resulting signature is odd).
PlatAnalysis analyze_diagram(const PlanarDiagram& d);
PlatAnalysis analyze_plat(const BraidWord& word);

struct InvariantReport {
    Conway conway;             // normalized odd-length notation reported on
    mpq_class fraction;        // continued fraction p/q
    mpz_class det;             // determinant |p|
    LensSpace lens;
    long long e = 0;           // braid exponent sum
    long long w = 0;           // diagram writhe
    long long mu_one = 0;
    long long mu_two = 0;
    long long s_r = 0;         // grading shift (e - w - 2)/4
    long long r_tilde = 0;     // occupied automaton level
    long long reduced = 0;     // R = r_tilde + s_r = sigma / 2
    long long sigma = 0;
    mpq_class r;               // concordance invariant 3*sigma/4
    mpz_class generator_count;
};

// Computes every invariant for the given notation (empty = unknot) and
// cross-checks all internal identities, throwing IdentityError on any
// disagreement and LinkError when the notation describes a two-component
// link.  The notation is normalized to odd length first; all reported
// diagram quantities refer to the normalized form.
InvariantReport report(const Conway& notation);
InvariantReport report_unknot();

// Serializes a report with a fixed field order.
nlohmann::ordered_json to_json(const InvariantReport& rep);

// Narrowing helper for JSON output: throws std::overflow_error when the
// exact value exceeds the 64-bit range.
long long to_int64(const mpz_class& v);

// The concordance invariant 3*sigma/4 in lowest terms.
mpq_class concordance_r(long long sigma);

// Verifies sigma, r, and the determinant of the mirror image by running the
// whole diagram pipeline on the mirrored braid word.
void check_mirror(const Conway& notation);

// Verifies signature additivity and determinant multiplicativity on the
// spliced connected-sum diagram of the two notations (empty = unknot).
void check_sum(const Conway& a, const Conway& b);

}  // namespace twobridge

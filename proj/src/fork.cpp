#include "fork.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace twobridge {

namespace {

void add(GradedCount& h, long long level, const mpz_class& n) {
    if (n == 0) return;
    auto it = h.find(level);
    if (it == h.end())
        h.emplace(level, n);
    else
        it->second += n;
}

// Removes exactly one object at `level`, which must be present.
void take_one(GradedCount& h, long long level, const char* what) {
    auto it = h.find(level);
    if (it == h.end() || it->second <= 0)
        throw IdentityError(std::string("fork automaton: no ") + what +
                            " available at level " + std::to_string(level));
    if (--it->second == 0) h.erase(it);
}

mpz_class total(const GradedCount& h) {
    mpz_class t = 0;
    for (const auto& [level, n] : h) t += n;
    return t;
}

// The approach side is a function of the puncture: the free end meets the
// outer punctures from below and the middle one from above.
Approach approach_for(Puncture p) {
    return p == Puncture::P2 ? Approach::Above : Approach::Below;
}

// Core twist step shared by both signs.  `d` is +1 on positive runs and -1
// on negative runs; the mirrored rules are the same rules with all grading
// increments negated.
ForkState step_braiding(const ForkState& s, int d) {
    // Letters sigma_1^{-d}: every generator persists and spawns a central
    // intersection one level up (levels counted in the `d` direction).
    ForkState out = s;
    for (const auto& [level, n] : s.interior) add(out.central, level + d, n);

    switch (s.endpoint.puncture) {
        case Puncture::P1: {
            // Free end swings from the first puncture to the middle one and
            // picks its generator back out of the interior.  The generator
            // already spawned above as part of the interior sweep, so the
            // move itself adds nothing.
            take_one(out.interior, s.endpoint.grading, "interior generator");
            out.endpoint.puncture = Puncture::P2;
            break;
        }
        case Puncture::P2: {
            // Free end swings from the middle puncture to the first one.
            // Its generator spawns a central intersection one level up and
            // then rejoins the interior population.
            add(out.central, s.endpoint.grading + d, 1);
            add(out.interior, s.endpoint.grading, 1);
            out.endpoint.puncture = Puncture::P1;
            break;
        }
        case Puncture::P3:
            // The end sits at the third puncture; this letter only braids
            // the first two, so the slot is untouched.
            break;
    }
    out.endpoint.approach = approach_for(out.endpoint.puncture);
    return out;
}

ForkState step_twisting(const ForkState& s, int d) {
    // Letters sigma_2^{d}: every bulk central intersection persists and
    // spawns an interior generator one level down.
    ForkState out = s;
    for (const auto& [level, n] : s.central) add(out.interior, level - d, n);

    switch (s.endpoint.puncture) {
        case Puncture::P1:
            // This letter braids the second and third punctures; an end at
            // the first puncture is untouched.
            break;
        case Puncture::P2: {
            // The end twists from the middle puncture onto the third and now
            // terminates against a central intersection one level up; its
            // old generator keeps existing inside the interior.  The central
            // it lands on comes out of the bulk population.
            add(out.interior, s.endpoint.grading, 1);
            take_one(out.central, s.endpoint.grading + d, "central intersection");
            out.endpoint.puncture = Puncture::P3;
            out.endpoint.grading += d;
            break;
        }
        case Puncture::P3: {
            // The end twists back from the third puncture to the middle one.
            // Its central intersection spawns the new end generator one
            // level down and itself survives in the bulk.
            add(out.central, s.endpoint.grading, 1);
            out.endpoint.puncture = Puncture::P2;
            out.endpoint.grading -= d;
            break;
        }
    }
    out.endpoint.approach = approach_for(out.endpoint.puncture);
    return out;
}

void require_direction(const ForkState& s, int d, const char* op) {
    if (s.direction != d)
        throw std::invalid_argument(std::string(op) +
                                    " applies only to runs with direction " + std::to_string(d));
}

}  // namespace

mpz_class ForkState::generator_total() const {
    mpz_class t = total(interior);
    if (endpoint.puncture == Puncture::P2) t += 1;
    return t;
}

GradedCount ForkState::generator_histogram() const {
    GradedCount h = interior;
    if (endpoint.puncture == Puncture::P2) add(h, endpoint.grading, 1);
    return h;
}

mpz_class ForkState::central_total() const {
    mpz_class t = total(central);
    if (endpoint.puncture == Puncture::P3) t += 1;
    return t;
}

GradedCount ForkState::central_histogram() const {
    GradedCount h = central;
    if (endpoint.puncture == Puncture::P3) add(h, endpoint.grading, 1);
    return h;
}

ForkState init_twist(long long b1) {
    if (b1 == 0) throw std::invalid_argument("leading Conway entry must be nonzero");
    ForkState s;
    s.direction = b1 > 0 ? 1 : -1;
    long long base = b1 > 0 ? 0 : 1;  // generator level of the seed bundle
    long long n = std::llabs(b1);
    if (n % 2 == 1) {
        // Odd twist count: the free end parks at the third puncture holding
        // the single central intersection of the seed diagram.
        add(s.interior, base, mpz_class(static_cast<long>(n)));
        s.endpoint = {Puncture::P3, approach_for(Puncture::P3), base + s.direction};
    } else {
        // Even twist count: the free end returns to the middle puncture with
        // its own generator; one central intersection sits in the bulk.
        add(s.interior, base, mpz_class(static_cast<long>(n - 1)));
        add(s.central, base + s.direction, 1);
        s.endpoint = {Puncture::P2, approach_for(Puncture::P2), base};
    }
    return s;
}

ForkState apply_sigma1_inv(const ForkState& s) {
    require_direction(s, 1, "apply_sigma1_inv");
    return step_braiding(s, 1);
}

ForkState apply_sigma2(const ForkState& s) {
    require_direction(s, 1, "apply_sigma2");
    return step_twisting(s, 1);
}

ForkState apply_sigma1(const ForkState& s) {
    require_direction(s, -1, "apply_sigma1");
    return step_braiding(s, -1);
}

ForkState apply_sigma2_inv(const ForkState& s) {
    require_direction(s, -1, "apply_sigma2_inv");
    return step_twisting(s, -1);
}

ForkRun run(const Conway& c, std::string* trace) {
    if (c.empty()) throw std::invalid_argument("empty Conway notation");
    if (c.size() % 2 == 0)
        throw std::invalid_argument("fork automaton requires an odd-length notation");

    int d = c.front() > 0 ? 1 : -1;
    ForkState s = init_twist(c.front());
    if (trace) {
        *trace += "init " + std::to_string(c.front()) + ": " + describe(s) + "\n";
    }
    for (size_t i = 1; i < c.size(); ++i) {
        bool twist_region = (i % 2 == 0);  // odd positions braid, even twist
        long long reps = std::llabs(c[i]);
        for (long long k = 0; k < reps; ++k) {
            s = twist_region ? step_twisting(s, d) : step_braiding(s, d);
            if (trace) {
                const char* name = twist_region ? (d > 0 ? "sigma2" : "sigma2^-1")
                                                : (d > 0 ? "sigma1^-1" : "sigma1");
                *trace += std::string(name) + ": " + describe(s) + "\n";
            }
        }
    }

    ForkRun result;
    result.histogram = s.generator_histogram();
    result.generator_count = s.generator_total();
    if (result.histogram.size() != 1)
        throw IdentityError("fork automaton: generator histogram of " + conway_to_string(c) +
                            " occupies " + std::to_string(result.histogram.size()) +
                            " levels instead of one");
    result.r_tilde = result.histogram.begin()->first;
    return result;
}

std::string describe(const ForkState& s) {
    std::ostringstream out;
    auto render = [&out](const GradedCount& h) {
        out << '{';
        bool first = true;
        for (const auto& [level, n] : h) {
            if (!first) out << ", ";
            first = false;
            out << level << ": " << n;
        }
        out << '}';
    };
    out << "interior ";
    render(s.interior);
    out << " central ";
    render(s.central);
    out << " end ";
    switch (s.endpoint.puncture) {
        case Puncture::P1: out << "mu1"; break;
        case Puncture::P2: out << "mu2"; break;
        case Puncture::P3: out << "mu3"; break;
    }
    out << (s.endpoint.approach == Approach::Above ? " above" : " below");
    out << " @" << s.endpoint.grading;
    return out.str();
}

}  // namespace twobridge

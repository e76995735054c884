#include "sweep.hpp"

#include <map>
#include <set>

#include "diagram.hpp"
#include "errors.hpp"
#include "fork.hpp"
#include "goeritz.hpp"
#include "invariants.hpp"

namespace twobridge {

namespace {

void enumerate(long long remaining, int slots_left, Conway& prefix,
               std::vector<Conway>& out) {
    if (!prefix.empty()) out.push_back(prefix);
    if (slots_left == 0) return;
    for (long long part = 1; part <= remaining; ++part) {
        prefix.push_back(part);
        enumerate(remaining - part, slots_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Conway> sweep_notations(const SweepOptions& opt) {
    std::vector<Conway> raw;
    Conway prefix;
    enumerate(opt.max_sum, opt.max_len, prefix, raw);

    std::set<Conway> unique;
    for (const Conway& c : raw) {
        if (opt.positive) unique.insert(normalize_odd(c));
        if (opt.negative) {
            Conway neg = c;
            for (long long& v : neg) v = -v;
            unique.insert(normalize_odd(neg));
        }
    }

    std::vector<Conway> result;
    if (opt.dedup_fraction) {
        std::map<mpq_class, Conway> by_value;
        for (const Conway& c : unique) by_value.emplace(continued_fraction(c), c);
        for (const auto& [value, c] : by_value) result.push_back(c);
    } else {
        result.assign(unique.begin(), unique.end());
    }
    return result;
}

SweepCase analyze_case(const Conway& normalized) {
    SweepCase c;
    c.notation = normalized;
    c.expected_level = normalized.front() > 0 ? 0 : 1;

    mpq_class fraction = continued_fraction(normalized);
    c.det = abs(fraction.get_num());
    c.knot = (c.det % 2 != 0);
    c.closed_sign = conway_closed_form_sign(normalized);

    BraidWord braid = conway_to_braid(normalized);
    c.e = exponent_sum(braid);

    // Unoriented route: coloring and the Goeritz form need no orientation,
    // so they are available for links as well.
    PlanarDiagram d = plat_closure(braid);
    ColoredDiagram col = checkerboard(d);
    std::vector<int> eta = incidence_numbers(col);
    IntMatrix g = goeritz_matrix(col, eta);
    c.sign_g = matrix_signature(g);
    c.det_g_abs = abs(determinant(g));

    BraidWord mirrored = mirror(braid);
    PlanarDiagram dm = plat_closure(mirrored);
    ColoredDiagram colm = checkerboard(dm);
    IntMatrix gm = goeritz_matrix(colm, incidence_numbers(colm));
    c.mir_det_abs = abs(determinant(gm));

    if (c.knot) {
        OrientedDiagram o = orient(d);
        CrossingStats stats = crossing_stats(col, o);
        c.w = o.writhe;
        c.mu_one = stats.mu_one;
        c.mu_two = stats.mu_two;
        c.sigma = c.sign_g - c.mu_two;
        c.shift_integral = ((c.e - c.w - 2) % 4 == 0);

        OrientedDiagram om = orient(dm);
        CrossingStats statsm = crossing_stats(colm, om);
        c.mir_sigma = matrix_signature(gm) - statsm.mu_two;
    }

    try {
        ForkRun fork = run(normalized);
        c.concentrated = true;
        c.count = fork.generator_count;
        c.r_tilde = fork.r_tilde;
    } catch (const IdentityError&) {
        c.concentrated = false;
        c.count = 0;
    }

    if (c.knot && c.shift_integral) {
        c.reduced = c.r_tilde + (c.e - c.w - 2) / 4;
        c.closed_reduced = normalized.front() > 0 ? (c.e - c.w - 2) / 4 : (c.e - c.w + 2) / 4;
    }
    return c;
}

std::vector<std::string> case_violations(const SweepCase& c) {
    std::vector<std::string> bad;
    const std::string tag = conway_to_string(c.notation) + ": ";
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) bad.push_back(tag + what);
    };

    expect(c.concentrated, "generator histogram spreads over several levels");
    if (c.concentrated) {
        expect(c.r_tilde == c.expected_level,
               "automaton level " + std::to_string(c.r_tilde) + " != expected " +
                   std::to_string(c.expected_level));
        expect(c.count == c.det,
               "generator count " + c.count.get_str() + " != determinant " + c.det.get_str());
    }
    expect(c.det_g_abs == c.det,
           "|det G| = " + c.det_g_abs.get_str() + " != determinant " + c.det.get_str());
    expect(c.sign_g == c.closed_sign,
           "sign(G) = " + std::to_string(c.sign_g) + " != closed form " +
               std::to_string(c.closed_sign));
    expect(c.mir_det_abs == c.det,
           "mirror |det G| = " + c.mir_det_abs.get_str() + " != determinant " +
               c.det.get_str());

    if (c.knot) {
        long long entry_sum = 0;
        for (long long b : c.notation) entry_sum += b;
        expect(-(c.mu_one + c.mu_two) == entry_sum,
               "-(mu_I + mu_II) = " + std::to_string(-(c.mu_one + c.mu_two)) +
                   " != entry sum " + std::to_string(entry_sum));
        expect(c.w == c.mu_two - c.mu_one,
               "w = " + std::to_string(c.w) + " != mu_II - mu_I = " +
                   std::to_string(c.mu_two - c.mu_one));
        expect(c.sigma % 2 == 0, "sigma = " + std::to_string(c.sigma) + " is odd");
        expect(c.shift_integral, "(e - w - 2) is not divisible by 4");
        if (c.shift_integral) {
            expect(c.reduced == c.closed_reduced,
                   "R = " + std::to_string(c.reduced) + " != closed form " +
                       std::to_string(c.closed_reduced));
            expect(2 * c.reduced == c.sigma,
                   "2R = " + std::to_string(2 * c.reduced) + " != sigma = " +
                       std::to_string(c.sigma));
        }
        expect(c.mir_sigma == -c.sigma,
               "mirror sigma = " + std::to_string(c.mir_sigma) + " != -sigma = " +
                   std::to_string(-c.sigma));
    }
    return bad;
}

SweepSummary run_sweep(const SweepOptions& opt, std::vector<SweepCase>* out_cases) {
    SweepSummary summary;
    constexpr size_t kMessageCap = 20;
    for (const Conway& notation : sweep_notations(opt)) {
        SweepCase c = analyze_case(notation);
        ++summary.cases;
        (c.knot ? summary.knots : summary.links) += 1;
        std::vector<std::string> bad = case_violations(c);
        if (!bad.empty()) {
            ++summary.failures;
            for (const std::string& msg : bad)
                if (summary.messages.size() < kMessageCap) summary.messages.push_back(msg);
        }
        if (out_cases) out_cases->push_back(std::move(c));
    }
    return summary;
}

}  // namespace twobridge

// Acceptance runner: exercises every advertised guarantee end to end and
// prints one [PASS]/[FAIL] line per criterion.  All comparisons are exact;
// the process exits nonzero when any criterion fails.

#include <gmpxx.h>

#include <chrono>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braid.hpp"
#include "cli.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "fork.hpp"
#include "goeritz.hpp"
#include "invariants.hpp"
#include "sweep.hpp"

using namespace twobridge;
using Clock = std::chrono::steady_clock;

namespace {

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

struct Criterion {
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> details;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (details.size() < 3) details.push_back(what);
    }
};

int total_failed = 0;

void conclude(int index, const std::string& summary, const Criterion& c) {
    bool pass = (c.failures == 0);
    if (!pass) ++total_failed;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << summary
              << " — " << c.checks << " checks, " << c.failures << " failures\n";
    for (const std::string& d : c.details) std::cout << "         " << d << "\n";
}

// ---------------------------------------------------------------------------
// Criterion 6 helpers: random instances and an independent inertia oracle.

IntMatrix random_symmetric(int n, std::mt19937_64& rng) {
    IntMatrix m(n);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int v = entry(rng);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

IntMatrix random_unimodular(int n, std::mt19937_64& rng) {
    IntMatrix u(n);
    for (int i = 0; i < n; ++i) u.at(i, i) = 1;
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> kind(0, 3);
    int ops = 3 + static_cast<int>(rng() % 8);
    for (int t = 0; t < ops; ++t) {
        int i = idx(rng), j = idx(rng);
        switch (kind(rng)) {
            case 0: {
                if (i == j) break;
                int c = coef(rng);
                for (int k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
                break;
            }
            case 1:
                for (int k = 0; k < n; ++k) std::swap(u.at(i, k), u.at(j, k));
                break;
            default:
                for (int k = 0; k < n; ++k) u.at(i, k) = -u.at(i, k);
                break;
        }
    }
    return u;
}

IntMatrix congruence(const IntMatrix& u, const IntMatrix& m) {
    const int n = m.n;
    IntMatrix tmp(n), out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                tmp.at(i, j) += m.at(i, k) * u.at(k, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.at(i, j) += u.at(k, i) * tmp.at(k, j);
    return out;
}

// Brute-force inertia through the characteristic polynomial: the matrix is
// symmetric, so the polynomial is real-rooted and Descartes' sign-change
// count is exact.  Coefficients come from the Faddeev-LeVerrier recurrence
// in exact integers; this shares no code with the congruence-elimination
// implementation under test.
bool oracle_inertia(const IntMatrix& m, Inertia& out) {
    const int n = m.n;
    // p(x) = x^n + c[1] x^{n-1} + ... + c[n]
    std::vector<mpz_class> c(n + 1);
    c[0] = 1;
    IntMatrix mk = m;  // M_1 = A
    for (int k = 1; k <= n; ++k) {
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        mpz_class q, r;
        mpz_class neg_tr = -tr;
        mpz_class kk = k;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), neg_tr.get_mpz_t(), kk.get_mpz_t());
        if (r != 0) return false;  // the recurrence divides exactly by design
        c[k] = q;
        if (k == n) break;
        // M_{k+1} = A * (M_k + c[k] * I)
        IntMatrix step = mk;
        for (int i = 0; i < n; ++i) step.at(i, i) += c[k];
        IntMatrix next(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l)
                    next.at(i, j) += m.at(i, l) * step.at(l, j);
        mk = next;
    }
    // Ascending coefficients: asc[i] multiplies x^i.
    std::vector<mpz_class> asc(n + 1);
    for (int i = 0; i <= n; ++i) asc[i] = c[n - i];
    int t = 0;
    while (t <= n && asc[t] == 0) ++t;
    out.n_zero = t;
    auto changes = [&](bool negate_odd) {
        int count = 0, last = 0;
        for (int i = t; i <= n; ++i) {
            int s = sgn(asc[i]);
            if (s == 0) continue;
            if (negate_odd && (i % 2 == 1)) s = -s;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    out.n_plus = changes(false);
    out.n_minus = changes(true);
    return out.n_plus + out.n_minus + out.n_zero == n;
}

// ---------------------------------------------------------------------------

void criterion_1() {
    Criterion c;
    auto start = Clock::now();
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int rc = run_command({"invariants", "3", "--json"});
    std::cout.rdbuf(old);
    long long elapsed = ms_since(start);

    c.expect(rc == 0, "exit code " + std::to_string(rc));
    try {
        nlohmann::json j = nlohmann::json::parse(captured.str());
        c.expect(j.at("generator_count").get<long long>() == 3,
                 "generator_count " + j.at("generator_count").dump());
        c.expect(j.at("R").get<long long>() == 1, "R " + j.at("R").dump());
        c.expect(j.at("det").get<long long>() == 3, "det " + j.at("det").dump());
        c.expect(j.at("lens_space").get<std::string>() == "L(3,1)",
                 "lens_space " + j.at("lens_space").dump());
    } catch (const std::exception& ex) {
        c.expect(false, std::string("output not parseable: ") + ex.what());
    }
    ForkRun fork = run({3});
    c.expect(fork.histogram.size() == 1, "histogram spans several levels");
    c.expect(elapsed < 1000, "took " + std::to_string(elapsed) + " ms (limit 1000)");
    conclude(1, "three-twist example: 3 generators on one level, det 3, L(3,1), " +
                    std::to_string(elapsed) + " ms",
             c);
}

void criterion_2(const std::vector<SweepCase>& cases, long long sweep_ms) {
    Criterion c;
    long long knots = 0;
    for (const SweepCase& sc : cases) {
        const std::string tag = conway_to_string(sc.notation) + ": ";
        c.expect(sc.concentrated, tag + "histogram not concentrated");
        c.expect(sc.count == sc.det,
                 tag + "count " + sc.count.get_str() + " != det " + sc.det.get_str());
        c.expect(sc.det_g_abs == sc.det,
                 tag + "|det G| " + sc.det_g_abs.get_str() + " != det " + sc.det.get_str());
        if (!sc.knot) continue;
        ++knots;
        c.expect(sc.shift_integral, tag + "grading shift not integral");
        c.expect(sc.reduced == sc.closed_reduced,
                 tag + "automaton R " + std::to_string(sc.reduced) + " != closed form " +
                     std::to_string(sc.closed_reduced));
        c.expect(2 * sc.reduced == sc.sigma,
                 tag + "2R " + std::to_string(2 * sc.reduced) + " != sigma " +
                     std::to_string(sc.sigma));
    }
    c.expect(sweep_ms < 10000,
             "sweep took " + std::to_string(sweep_ms) + " ms (limit 10000)");
    conclude(2, "sweep of " + std::to_string(cases.size()) + " notations (" +
                    std::to_string(knots) + " knots): R agreement and generator counts, " +
                    std::to_string(sweep_ms) + " ms",
             c);
}

void criterion_3(const std::vector<SweepCase>& cases) {
    Criterion c;
    for (const SweepCase& sc : cases) {
        const std::string tag = conway_to_string(sc.notation) + ": ";
        c.expect(sc.sign_g == sc.closed_sign,
                 tag + "sign(G) " + std::to_string(sc.sign_g) + " != closed form " +
                     std::to_string(sc.closed_sign));
        if (!sc.knot) continue;
        c.expect(sc.w == sc.mu_two - sc.mu_one,
                 tag + "w " + std::to_string(sc.w) + " != mu_II - mu_I");
        long long entry_sum = 0;
        for (long long b : sc.notation) entry_sum += b;
        c.expect(-(sc.mu_one + sc.mu_two) == entry_sum,
                 tag + "-(mu_I + mu_II) != entry sum " + std::to_string(entry_sum));
    }
    conclude(3, "writhe decomposition, incidence sum, and signature closed form", c);
}

void criterion_4(const std::vector<SweepCase>& cases) {
    Criterion c;
    for (const SweepCase& sc : cases) {
        const std::string tag = conway_to_string(sc.notation) + ": ";
        c.expect(sc.mir_det_abs == sc.det,
                 tag + "mirror det " + sc.mir_det_abs.get_str() + " != det " +
                     sc.det.get_str());
        if (!sc.knot) continue;
        c.expect(sc.mir_sigma == -sc.sigma,
                 tag + "mirror sigma " + std::to_string(sc.mir_sigma) + " != -sigma");
        c.expect(concordance_r(sc.mir_sigma) == -concordance_r(sc.sigma),
                 tag + "mirror r not negated");
    }
    conclude(4, "mirror laws through the mirrored-braid pipeline on every sweep case", c);
}

void criterion_5() {
    Criterion c;
    const std::vector<std::pair<Conway, Conway>> pairs = {
        {{}, {3}},
        {{3}, {3}},
        {{3}, {-3}},
        {{3}, {5}},
        {{5}, {5}},
        {{3}, {2, 1, 1}},
        {{2, 1, 1}, {2, 1, 1}},
        {{5}, {2, 1, 1}},
        {{3}, {3, 1, 1}},
        {{3, 1, 1}, {-3}},
        {{2, 1, 1}, {3, 1, 1}},
        {{5}, {-3}},
    };
    for (const auto& [a, b] : pairs) {
        const std::string tag = (a.empty() ? "unknot" : conway_to_string(a)) + " # " +
                                (b.empty() ? "unknot" : conway_to_string(b)) + ": ";
        try {
            check_sum(a, b);
            PlatAnalysis an_a = analyze_plat(plat_word(a));
            PlatAnalysis an_b = analyze_plat(plat_word(b));
            PlatAnalysis an_s = analyze_diagram(splice_connected_sum(an_a.o, an_b.o));
            c.expect(an_s.sigma == an_a.sigma + an_b.sigma, tag + "sigma not additive");
            c.expect(abs(determinant(an_s.g)) ==
                         abs(determinant(an_a.g)) * abs(determinant(an_b.g)),
                     tag + "det not multiplicative");
            c.expect(concordance_r(an_s.sigma) ==
                         concordance_r(an_a.sigma) + concordance_r(an_b.sigma),
                     tag + "r not additive");
        } catch (const std::exception& ex) {
            c.expect(false, tag + ex.what());
        }
    }
    conclude(5, "connected-sum laws on " + std::to_string(pairs.size()) + " catalog pairs",
             c);
}

void criterion_6() {
    Criterion c;
    std::mt19937_64 rng(0x2b2b2b2bULL);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + t % 6;
        IntMatrix m = random_symmetric(n, rng);
        IntMatrix u = random_unimodular(n, rng);
        IntMatrix conj = congruence(u, m);
        const std::string tag = "instance " + std::to_string(t) + ": ";

        Inertia base = inertia(m);
        Inertia moved = inertia(conj);
        c.expect(base.n_plus == moved.n_plus && base.n_minus == moved.n_minus &&
                     base.n_zero == moved.n_zero,
                 tag + "inertia changed under unimodular congruence");

        Inertia oracle;
        if (!oracle_inertia(m, oracle)) {
            c.expect(false, tag + "oracle polynomial inconsistent");
            continue;
        }
        c.expect(base.n_plus == oracle.n_plus && base.n_minus == oracle.n_minus &&
                     base.n_zero == oracle.n_zero,
                 tag + "inertia (" + std::to_string(base.n_plus) + "," +
                     std::to_string(base.n_minus) + "," + std::to_string(base.n_zero) +
                     ") != oracle (" + std::to_string(oracle.n_plus) + "," +
                     std::to_string(oracle.n_minus) + "," + std::to_string(oracle.n_zero) +
                     ")");
        c.expect(matrix_signature(m) == oracle.n_plus - oracle.n_minus,
                 tag + "signature != oracle signature");
    }
    conclude(6, "signature invariance under 200 unimodular congruences plus an "
                "independent characteristic-polynomial inertia oracle",
             c);
}

void criterion_7(const std::vector<SweepCase>& cases) {
    Criterion c;
    for (const SweepCase& sc : cases) {
        const std::string tag = conway_to_string(sc.notation) + ": ";
        c.expect(sc.concentrated, tag + "histogram occupies several levels");
        if (sc.concentrated)
            c.expect(sc.r_tilde == sc.expected_level,
                     tag + "level " + std::to_string(sc.r_tilde) + " != expected " +
                         std::to_string(sc.expected_level));
    }
    conclude(7, "automaton concentration at level 0 (positive) / 1 (negative)", c);
}

}  // namespace

int main() {
    criterion_1();

    auto sweep_start = Clock::now();
    SweepOptions opt;  // defaults: length <= 5, entry sum <= 10, both signs
    std::vector<SweepCase> cases;
    run_sweep(opt, &cases);
    long long sweep_ms = ms_since(sweep_start);

    criterion_2(cases, sweep_ms);
    criterion_3(cases);
    criterion_4(cases);
    criterion_5();
    criterion_6();
    criterion_7(cases);

    if (total_failed == 0) {
        std::cout << "all 7 criteria passed\n";
        return 0;
    }
    std::cout << total_failed << " of 7 criteria failed\n";
    return 1;
}

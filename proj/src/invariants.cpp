#include "invariants.hpp"

#include <cstdlib>
#include <stdexcept>

#include "errors.hpp"

namespace twobridge {

namespace {

std::string int_str(long long v) { return std::to_string(v); }

void require(bool ok, const std::string& what) {
    if (!ok) throw IdentityError(what);
}

}  // namespace

std::string LensSpace::label() const {
    return "L(" + p.get_str() + "," + q.get_str() + ")";
}

LensSpace lens_space(const mpq_class& fraction) {
    LensSpace lens;
    mpz_class num = fraction.get_num();
    mpz_class den = fraction.get_den();
    lens.p = abs(num);
    if (lens.p == 0) throw std::invalid_argument("lens space needs a nonzero fraction");
    mpz_class qq = num > 0 ? den : mpz_class(-den);
    mpz_mod(lens.q.get_mpz_t(), qq.get_mpz_t(), lens.p.get_mpz_t());
    return lens;
}

PlatAnalysis analyze_diagram(const PlanarDiagram& d) {
    PlatAnalysis an;
    an.d = d;
    an.o = orient(an.d);
    an.col = checkerboard(an.d);
    an.stats = crossing_stats(an.col, an.o);
    an.g = goeritz_matrix(an.col, an.stats.eta);
    an.sign_g = matrix_signature(an.g);
    an.det_g = determinant(an.g);
    an.sigma = an.sign_g - an.stats.mu_two;
    if (an.sigma % 2 != 0)
        throw ConventionError("knot signature came out odd: " + int_str(an.sigma));
    return an;
}

PlatAnalysis analyze_plat(const BraidWord& word) { return analyze_diagram(plat_closure(word)); }

InvariantReport report_unknot() {
    InvariantReport rep;
    rep.fraction = 1;
    rep.det = 1;
    rep.lens = lens_space(rep.fraction);
    rep.r = 0;
    rep.generator_count = 1;
    return rep;
}

InvariantReport report(const Conway& notation) {
    if (notation.empty()) return report_unknot();

    InvariantReport rep;
    rep.conway = normalize_odd(notation);
    rep.fraction = continued_fraction(rep.conway);
    rep.det = abs(rep.fraction.get_num());
    if (rep.det % 2 == 0)
        throw LinkError("determinant " + rep.det.get_str() +
                        " is even: the notation closes to a two-component link");
    rep.lens = lens_space(rep.fraction);

    BraidWord braid = conway_to_braid(rep.conway);
    rep.e = exponent_sum(braid);

    PlatAnalysis an = analyze_plat(braid);
    rep.w = an.o.writhe;
    rep.mu_one = an.stats.mu_one;
    rep.mu_two = an.stats.mu_two;
    rep.sigma = an.sigma;

    ForkRun fork = run(rep.conway);
    rep.r_tilde = fork.r_tilde;
    rep.generator_count = fork.generator_count;

    // Grading shift between the automaton's internal level and the absolute
    // reduced grading.
    long long numer = rep.e - rep.w - 2;
    if (numer % 4 != 0)
        throw ConventionError("grading shift (e - w - 2)/4 is not integral for " +
                              conway_to_string(rep.conway) + ": e = " + int_str(rep.e) +
                              ", w = " + int_str(rep.w));
    rep.s_r = numer / 4;
    rep.reduced = rep.r_tilde + rep.s_r;
    rep.r = concordance_r(rep.sigma);

    const std::string tag = " for " + conway_to_string(rep.conway);

    // The occupied level is 0 for positive notations and 1 for negative ones.
    long long expected_level = rep.conway.front() > 0 ? 0 : 1;
    require(rep.r_tilde == expected_level,
            "automaton level " + int_str(rep.r_tilde) + " differs from expected " +
                int_str(expected_level) + tag);

    // Closed form for the reduced grading.
    long long closed = rep.conway.front() > 0 ? (rep.e - rep.w - 2) / 4 : (rep.e - rep.w + 2) / 4;
    require(rep.reduced == closed, "reduced grading " + int_str(rep.reduced) +
                                       " differs from closed form " + int_str(closed) + tag);

    // The reduced grading is half the signature.
    require(2 * rep.reduced == rep.sigma, "reduced grading " + int_str(rep.reduced) +
                                              " is not half the signature " +
                                              int_str(rep.sigma) + tag);

    // Generator count equals the determinant equals |det G|.
    require(rep.generator_count == rep.det,
            "generator count " + rep.generator_count.get_str() +
                " differs from determinant " + rep.det.get_str() + tag);
    require(abs(an.det_g) == rep.det, "Goeritz determinant magnitude " +
                                          mpz_class(abs(an.det_g)).get_str() +
                                          " differs from determinant " + rep.det.get_str() + tag);

    // Writhe decomposition by crossing type.
    require(rep.w == rep.mu_two - rep.mu_one,
            "writhe " + int_str(rep.w) + " differs from mu_II - mu_I = " +
                int_str(rep.mu_two - rep.mu_one) + tag);

    // Incidence sum: all crossings of the normalized word share eta = -sign.
    long long entry_sum = 0;
    for (long long b : rep.conway) entry_sum += b;
    require(-(rep.mu_one + rep.mu_two) == entry_sum,
            "-(mu_I + mu_II) = " + int_str(-(rep.mu_one + rep.mu_two)) +
                " differs from the entry sum " + int_str(entry_sum) + tag);

    // Closed form for the Goeritz signature of the standard diagram.
    long long closed_sign = conway_closed_form_sign(rep.conway);
    require(an.sign_g == closed_sign, "Goeritz signature " + int_str(an.sign_g) +
                                          " differs from closed form " + int_str(closed_sign) +
                                          tag);

    return rep;
}

long long to_int64(const mpz_class& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("value " + v.get_str() +
                                  " exceeds the 64-bit range of the JSON output");
    return v.get_si();
}

mpq_class concordance_r(long long sigma) {
    mpq_class r(static_cast<long>(3 * sigma), 4);
    r.canonicalize();
    return r;
}

nlohmann::ordered_json to_json(const InvariantReport& rep) {
    nlohmann::ordered_json j;
    j["conway"] = rep.conway;
    j["fraction"] = {{"num", to_int64(rep.fraction.get_num())},
                     {"den", to_int64(rep.fraction.get_den())}};
    j["det"] = to_int64(rep.det);
    j["lens_space"] = rep.lens.label();
    j["e"] = rep.e;
    j["w"] = rep.w;
    j["mu_I"] = rep.mu_one;
    j["mu_II"] = rep.mu_two;
    j["s_R"] = rep.s_r;
    j["r_tilde"] = rep.r_tilde;
    j["R"] = rep.reduced;
    j["sigma"] = rep.sigma;
    j["r"] = {{"num", to_int64(rep.r.get_num())}, {"den", to_int64(rep.r.get_den())}};
    j["generator_count"] = to_int64(rep.generator_count);
    return j;
}

void check_mirror(const Conway& notation) {
    BraidWord base_word = plat_word(notation);
    PlatAnalysis base = analyze_diagram(plat_closure(base_word));
    PlatAnalysis mir = analyze_diagram(plat_closure(mirror(base_word)));

    const std::string tag = notation.empty() ? std::string(" for the unknot")
                                             : " for " + conway_to_string(notation);
    require(mir.sigma == -base.sigma,
            "mirror signature " + int_str(mir.sigma) + " is not the negative of " +
                int_str(base.sigma) + tag);
    require(abs(mir.det_g) == abs(base.det_g),
            "mirror determinant " + mpz_class(abs(mir.det_g)).get_str() + " differs from " +
                mpz_class(abs(base.det_g)).get_str() + tag);
    require(concordance_r(mir.sigma) == -concordance_r(base.sigma),
            "mirror concordance invariant is not negated" + tag);
}

void check_sum(const Conway& a, const Conway& b) {
    PlatAnalysis an_a = analyze_plat(plat_word(a));
    PlatAnalysis an_b = analyze_plat(plat_word(b));
    PlanarDiagram spliced = splice_connected_sum(an_a.o, an_b.o);
    PlatAnalysis an_sum = analyze_diagram(spliced);

    const std::string tag = " for " + (a.empty() ? "unknot" : conway_to_string(a)) + " # " +
                            (b.empty() ? "unknot" : conway_to_string(b));
    require(an_sum.sigma == an_a.sigma + an_b.sigma,
            "connected-sum signature " + int_str(an_sum.sigma) + " differs from " +
                int_str(an_a.sigma) + " + " + int_str(an_b.sigma) + tag);
    require(abs(an_sum.det_g) == abs(an_a.det_g) * abs(an_b.det_g),
            "connected-sum determinant " + mpz_class(abs(an_sum.det_g)).get_str() +
                " is not the product of " + mpz_class(abs(an_a.det_g)).get_str() + " and " +
                mpz_class(abs(an_b.det_g)).get_str() + tag);
    require(concordance_r(an_sum.sigma) == concordance_r(an_a.sigma) + concordance_r(an_b.sigma),
            "connected-sum concordance invariant is not additive" + tag);
}

}  // namespace twobridge

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "braid.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "fork.hpp"
#include "invariants.hpp"
#include "sweep.hpp"

namespace twobridge {

namespace {

using nlohmann::ordered_json;

constexpr long long kCrossingCap = 1'000'000;

struct CatalogEntry {
    std::string name;
    Conway conway;
};

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError("catalog " + path + ": " + ex.what());
    }
    if (!doc.is_array()) throw ParseError("catalog " + path + ": expected a JSON array");
    std::vector<CatalogEntry> entries;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("name") || !item.contains("conway"))
            throw ParseError("catalog " + path + ": entries need 'name' and 'conway'");
        CatalogEntry e;
        e.name = item.at("name").get<std::string>();
        for (const auto& v : item.at("conway")) e.conway.push_back(v.get<long long>());
        entries.push_back(std::move(e));
    }
    return entries;
}

void check_size(const Conway& c) {
    long long total = 0;
    for (long long b : c) total += std::llabs(b);
    if (total > kCrossingCap)
        throw ParseError("notation needs " + std::to_string(total) +
                         " crossings; the limit is " + std::to_string(kCrossingCap));
}

// Interprets an argument as a Conway notation, the unknot sentinel (empty
// string or "unknot"), or the name of a catalog entry.
Conway resolve_notation(const std::string& arg, const std::string& catalog_path) {
    if (arg.empty() || arg == "unknot") return {};
    bool notation_like =
        arg.find_first_not_of("0123456789,+-[] \t") == std::string::npos;
    if (notation_like) {
        Conway c = parse_conway(arg);
        check_size(c);
        return c;
    }
    for (const CatalogEntry& e : load_catalog(catalog_path)) {
        if (e.name == arg) {
            check_size(e.conway);
            return e.conway;
        }
    }
    throw ParseError("'" + arg + "' is neither a Conway notation nor an entry in " +
                     catalog_path);
}

std::string rational_str(const mpq_class& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

ordered_json rational_json(const mpq_class& v) {
    return {{"num", to_int64(v.get_num())}, {"den", to_int64(v.get_den())}};
}

int do_invariants(const std::string& arg, const std::string& catalog_path, bool json,
                  bool trace) {
    Conway c = resolve_notation(arg, catalog_path);
    InvariantReport rep = report(c);
    if (trace && !c.empty()) {
        std::string lines;
        run(rep.conway, &lines);
        std::cerr << lines;
    }
    if (json) {
        std::cout << to_json(rep).dump(2) << "\n";
        return 0;
    }
    std::cout << "conway:          "
              << (rep.conway.empty() ? "unknot" : conway_to_string(rep.conway)) << "\n"
              << "fraction:        " << rational_str(rep.fraction) << "\n"
              << "det:             " << rep.det.get_str() << "\n"
              << "lens space:      " << rep.lens.label() << "\n"
              << "e:               " << rep.e << "\n"
              << "w:               " << rep.w << "\n"
              << "mu_I:            " << rep.mu_one << "\n"
              << "mu_II:           " << rep.mu_two << "\n"
              << "s_R:             " << rep.s_r << "\n"
              << "r_tilde:         " << rep.r_tilde << "\n"
              << "R:               " << rep.reduced << "\n"
              << "sigma:           " << rep.sigma << "\n"
              << "r:               " << rational_str(rep.r) << "\n"
              << "generator count: " << rep.generator_count.get_str() << "\n";
    return 0;
}

int do_verify(const SweepOptions& opt, bool json) {
    SweepSummary s = run_sweep(opt);
    if (json) {
        ordered_json j;
        j["cases"] = s.cases;
        j["knots"] = s.knots;
        j["links"] = s.links;
        j["failures"] = s.failures;
        j["messages"] = s.messages;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "checked " << s.cases << " notations (" << s.knots << " knots, "
                  << s.links << " links)\n"
                  << "failures: " << s.failures << "\n";
        for (const std::string& msg : s.messages) std::cout << "  " << msg << "\n";
    }
    return s.failures == 0 ? 0 : 4;
}

int do_sum(const std::string& arg_a, const std::string& arg_b,
           const std::string& catalog_path, bool json) {
    Conway a = resolve_notation(arg_a, catalog_path);
    Conway b = resolve_notation(arg_b, catalog_path);
    check_sum(a, b);  // throws IdentityError when the laws fail

    PlatAnalysis an_a = analyze_plat(plat_word(a));
    PlatAnalysis an_b = analyze_plat(plat_word(b));
    PlatAnalysis an_s = analyze_diagram(splice_connected_sum(an_a.o, an_b.o));
    if (json) {
        ordered_json j;
        auto part = [&](const PlatAnalysis& an) {
            return ordered_json{{"sigma", an.sigma},
                                {"det", to_int64(abs(an.det_g))},
                                {"r", rational_json(concordance_r(an.sigma))}};
        };
        j["left"] = part(an_a);
        j["right"] = part(an_b);
        j["sum"] = part(an_s);
        j["verified"] = {"sigma additive", "det multiplicative", "r additive"};
        std::cout << j.dump(2) << "\n";
    } else {
        auto line = [&](const char* label, const PlatAnalysis& an) {
            std::cout << label << "sigma " << an.sigma << ", det " << mpz_class(abs(an.det_g)).get_str()
                      << ", r " << rational_str(concordance_r(an.sigma)) << "\n";
        };
        line("left:  ", an_a);
        line("right: ", an_b);
        line("sum:   ", an_s);
        std::cout << "verified: sigma additive, det multiplicative, r additive\n";
    }
    return 0;
}

int do_mirror(const std::string& arg, const std::string& catalog_path, bool json) {
    Conway c = resolve_notation(arg, catalog_path);
    check_mirror(c);  // throws IdentityError when the laws fail

    BraidWord word = plat_word(c);
    PlatAnalysis base = analyze_plat(word);
    PlatAnalysis mir = analyze_plat(mirror(word));
    if (json) {
        ordered_json j;
        auto part = [&](const PlatAnalysis& an) {
            return ordered_json{{"sigma", an.sigma},
                                {"det", to_int64(abs(an.det_g))},
                                {"r", rational_json(concordance_r(an.sigma))}};
        };
        j["base"] = part(base);
        j["mirror"] = part(mir);
        j["verified"] = {"sigma negated", "det preserved", "r negated"};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "base:   sigma " << base.sigma << ", det " << mpz_class(abs(base.det_g)).get_str()
                  << ", r " << rational_str(concordance_r(base.sigma)) << "\n"
                  << "mirror: sigma " << mir.sigma << ", det " << mpz_class(abs(mir.det_g)).get_str()
                  << ", r " << rational_str(concordance_r(mir.sigma)) << "\n"
                  << "verified: sigma negated, det preserved, r negated\n";
    }
    return 0;
}

int do_pd_export(const std::string& arg, const std::string& path,
                 const std::string& catalog_path) {
    Conway c = resolve_notation(arg, catalog_path);
    OrientedDiagram o = orient(plat_closure(plat_word(c)));
    std::string text = export_pd(o);
    if (path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write to " + path);
    out << text;
    std::cout << "wrote " << o.d.crossing_count << " crossings to " << path << "\n";
    return 0;
}

int do_pd_import(const std::string& path, bool json) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    PlanarDiagram d = import_pd(text);
    PlatAnalysis an = analyze_diagram(d);
    if (json) {
        ordered_json j;
        j["crossings"] = d.crossing_count;
        j["w"] = an.o.writhe;
        j["mu_I"] = an.stats.mu_one;
        j["mu_II"] = an.stats.mu_two;
        j["sigma"] = an.sigma;
        j["det"] = to_int64(abs(an.det_g));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "crossings: " << d.crossing_count << "\n"
                  << "w:         " << an.o.writhe << "\n"
                  << "mu_I:      " << an.stats.mu_one << "\n"
                  << "mu_II:     " << an.stats.mu_two << "\n"
                  << "sigma:     " << an.sigma << "\n"
                  << "det:       " << mpz_class(abs(an.det_g)).get_str() << "\n";
    }
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
    CLI::App app{"Exact invariants of two-bridge knots from Conway notation"};
    app.require_subcommand(1);

    bool json = false, trace = false;
    std::string catalog_path = "data/catalog.json";
    app.add_flag("--json", json, "Emit JSON instead of human-readable text");
    app.add_flag("--trace", trace, "Print the letter-by-letter automaton state to stderr");
    app.add_option("--catalog", catalog_path, "Path to the named-knot catalog")
        ->capture_default_str();

    auto* inv = app.add_subcommand("invariants", "Compute all invariants of one knot");
    inv->fallthrough();
    std::string inv_arg;
    inv->add_option("notation", inv_arg,
                    "Conway notation like '3' or '[2,1,1]', a catalog name, or '' for "
                    "the unknot")
        ->required();

    auto* verify = app.add_subcommand("verify", "Cross-check every identity on a sweep");
    verify->fallthrough();
    SweepOptions opt;
    std::string signs = "both";
    verify->add_option("--max-sum", opt.max_sum, "Bound on the total crossing number")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-len", opt.max_len, "Bound on the notation length")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--signs", signs, "Which sign families to sweep")
        ->capture_default_str()
        ->check(CLI::IsMember({"both", "positive", "negative"}));
    verify->add_flag("--dedup-fraction", opt.dedup_fraction,
                     "Keep one notation per continued-fraction value");

    auto* sum = app.add_subcommand("sum", "Verify connected-sum laws for two knots");
    sum->fallthrough();
    std::string sum_a, sum_b;
    sum->add_option("left", sum_a, "First operand")->required();
    sum->add_option("right", sum_b, "Second operand")->required();

    auto* mir = app.add_subcommand("mirror", "Verify mirror laws for one knot");
    mir->fallthrough();
    std::string mir_arg;
    mir->add_option("notation", mir_arg, "Notation, catalog name, or '' for the unknot")
        ->required();

    auto* pd = app.add_subcommand("pd", "Exchange diagrams in the PD text format");
    pd->fallthrough();
    pd->require_subcommand(1);
    auto* pde = pd->add_subcommand("export", "Write the plat diagram of a notation");
    pde->fallthrough();
    std::string pde_arg, pde_path;
    pde->add_option("notation", pde_arg, "Notation or catalog name")->required();
    pde->add_option("path", pde_path, "Output file, or - for stdout")->required();
    auto* pdi = pd->add_subcommand("import", "Read a PD file and compute its invariants");
    pdi->fallthrough();
    std::string pdi_path;
    pdi->add_option("path", pdi_path, "Input file, or - for stdin")->required();

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("twobridge");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (inv->parsed()) return do_invariants(inv_arg, catalog_path, json, trace);
        if (verify->parsed()) {
            opt.positive = (signs != "negative");
            opt.negative = (signs != "positive");
            return do_verify(opt, json);
        }
        if (sum->parsed()) return do_sum(sum_a, sum_b, catalog_path, json);
        if (mir->parsed()) return do_mirror(mir_arg, catalog_path, json);
        if (pd->parsed()) {
            if (pde->parsed()) return do_pd_export(pde_arg, pde_path, catalog_path);
            if (pdi->parsed()) return do_pd_import(pdi_path, json);
        }
        return 2;  // no subcommand matched (require_subcommand should prevent this)
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LinkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IdentityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace twobridge

// pcf-cubics: classify post-critically finite cubic polynomials over Q.
//
// Subcommands:
//   enumerate     run the full certified classification
//   check         analyze a single polynomial
//   search-space  dump a finite candidate space
//   portrait      emit the critical portrait of a PCF polynomial
//
// Exit codes: 0 success, 2 parse/usage error, 3 internal-guard failure.

#include "pcf/classify.hpp"
#include "pcf/poly_text.hpp"
#include "pcf/portrait_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace pcf;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

template <typename A>
std::string orbit_text(const OrbitResult<A>& r) {
    std::string s;
    if (r.preperiodic) {
        s = "preperiodic, tail " + std::to_string(r.tail) + ", period " + std::to_string(r.period);
    } else {
        s = "wandering at iterate " + std::to_string(r.witness.iterate);
        if (r.witness.kind == WitnessKind::AtPlace)
            s += ": absolute value at place " + r.witness.place.str() + " exceeds the escape bound";
        else
            s += ": a prime outside the bad-prime set divides a coordinate denominator";
    }
    std::size_t shown = std::min<std::size_t>(r.points.size(), 20);
    s += "\n    ";
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) s += " -> ";
        s += label_text(r.points[i]);
    }
    if (r.preperiodic)
        s += " -> (cycle)";
    else if (shown < r.points.size())
        s += " -> ...";
    return s;
}

int cmd_check(const std::string& poly_text) {
    Poly<Rational> f = parse_poly(poly_text);
    std::cout << "polynomial: " << pcf::poly_to_text(f) << "\n";
    std::cout << "coefficients: " << poly_to_coeff_list(f) << "\n";
    if (f.degree() < 2) {
        std::cerr << "error: degree out of supported range (need >= 2)\n";
        return kExitUsage;
    }

    if (f.degree() != 3) {
        // non-cubic input is supported only on the unicritical path
        UnicriticalForm uf;
        try {
            uf = unicritical_normalize(f);
        } catch (const std::invalid_argument&) {
            std::cerr << "error: degree out of supported range (only cubics and unicritical "
                         "polynomials are analyzed)\n";
            return kExitUsage;
        }
        std::cout << "critical points: unicritical\n";
        if (uf.power_map)
            std::cout << "normal form: power map (conjugate to z^" << f.degree() << ")\n";
        else
            std::cout << "normal form: a*z^" << f.degree() << " + 1 with a = " << to_string(uf.a)
                      << "\n";
        Rational gamma = -f.coeff(f.degree() - 1) / (Rational(f.degree()) * f.leading());
        auto r = orbit(f, gamma);
        std::cout << "critical orbit of " << to_string(gamma) << ": " << orbit_text(r) << "\n";
        std::cout << "pcf: " << (r.preperiodic ? "yes" : "no") << "\n";
        return kExitOk;
    }

    CriticalData cd = classify_critical(f);
    PcfAnalysis an = is_pcf(f);
    switch (cd.kind) {
        case CriticalCase::RationalPair: {
            std::cout << "critical points: rational pair {" << to_string(cd.gamma1) << ", "
                      << to_string(cd.gamma2) << "}\n";
            BelyiParams p = belyi_normalize(f);
            std::cout << "normal form: a*(-2z^3+3z^2) + c with (a, c) = (" << to_string(p.a)
                      << ", " << to_string(p.c) << ")\n";
            break;
        }
        case CriticalCase::IrrationalPair: {
            std::cout << "critical points: irrational pair " << to_string(cd.m) << " +- "
                      << to_string(cd.n) << "*sqrt(" << cd.D << ")\n";
            IrratParams p = irrational_normalize(f);
            std::cout << "normal form: a*(z^3/3 - D*z) + c with (D, a, c) = (" << p.D << ", "
                      << to_string(p.a) << ", " << to_string(p.c) << ")\n";
            break;
        }
        case CriticalCase::Unicritical: {
            std::cout << "critical points: unicritical {" << to_string(cd.gamma) << "}\n";
            UnicriticalForm uf = unicritical_normalize(f);
            if (uf.power_map)
                std::cout << "normal form: power map (conjugate to z^3)\n";
            else
                std::cout << "normal form: a*z^3 + 1 with a = " << to_string(uf.a) << "\n";
            break;
        }
    }

    if (cd.kind == CriticalCase::IrrationalPair) {
        auto [g1, g2] = cd.quad_points();
        std::cout << "critical orbit of " << g1.str() << ": " << orbit_text(an.quad_orbits[0])
                  << "\n";
        std::cout << "critical orbit of " << g2.str() << ": " << orbit_text(an.quad_orbits[1])
                  << "\n";
    } else {
        auto pts = cd.rational_points();
        for (std::size_t i = 0; i < pts.size(); ++i)
            std::cout << "critical orbit of " << to_string(pts[i]) << ": "
                      << orbit_text(an.rational_orbits[i]) << "\n";
    }
    std::cout << "pcf: " << (an.pcf ? "yes" : "no") << "\n";
    if (an.pcf) {
        AnyPortrait g = portrait_of(an, f);
        std::size_t nodes = std::visit([](const auto& x) { return x.nodes.size(); }, g);
        std::cout << "portrait: " << nodes << " nodes\n" << portrait_to_dot(g);
    }
    MonicCentered mc = monic_centered(f);
    std::cout << "monic centered: A = " << to_string(mc.A) << ", B^2 = " << to_string(mc.B_squared)
              << ", B " << (mc.B ? ("= " + to_string(*mc.B)) : std::string("irrational")) << "\n";
    std::cout << "conjugacy invariant: " << conjugacy_invariant(f).str() << "\n";
    return kExitOk;
}

int cmd_enumerate(const std::string& json_path, const std::string& markdown_path, int threads,
                  long max_iter) {
    EnumerateOptions opt;
    opt.threads = threads;
    opt.max_iter = max_iter;
    ClassificationReport rep = enumerate_all(opt);

    std::cout << "unicritical pcf values (d=3): ";
    for (const Rational& a : rep.unicritical_values) std::cout << to_string(a) << " ";
    std::cout << "(plus the power map class)\n";
    std::cout << "rational case: " << rep.stats.belyi_pairs << " candidates, "
              << rep.rational_raw_survivors.size() << " surviving pairs, "
              << rep.rational_classes.size() << " classes\n";
    std::cout << "irrational case: " << rep.stats.irrational_raw_rows << " rows ("
              << rep.stats.irrational_raw_polynomials << " polynomials), "
              << rep.stats.irrational_certified_triples << " certified triples, survivors:";
    for (const IrratParams& t : rep.irrational_survivors)
        std::cout << " (" << t.D << ", " << to_string(t.a) << ", " << to_string(t.c) << ")";
    std::cout << "\n";
    std::cout << "conjugacy classes: " << rep.classes.size() << "\n";
    for (const ClassEntry& e : rep.classes)
        std::cout << "  " << e.row << ". " << e.representative_text << "   invariant "
                  << e.invariant.str() << "\n";
    for (const std::string& n : rep.notes) std::cout << "note: " << n << "\n";
    std::cout << "timings: unicritical " << rep.seconds_unicritical << "s, rational "
              << rep.seconds_rational << "s, irrational " << rep.seconds_irrational << "s, total "
              << rep.seconds_total << "s\n";

    if (!json_path.empty()) write_file(json_path, report_to_json(rep).dump(2) + "\n");
    if (!markdown_path.empty()) write_file(markdown_path, report_to_markdown(rep));
    return kExitOk;
}

int cmd_search_space(const std::string& which, bool as_json) {
    if (which == "rational") {
        if (as_json) {
            std::cout << belyi_candidates_json().dump(2) << "\n";
        } else {
            std::cout << "rational case: " << belyi_candidates().size() << " candidate pairs\n";
        }
        return kExitOk;
    }
    if (which == "irrational") {
        IrrationalSpace space = irrational_candidates();
        if (as_json) {
            std::cout << irrational_candidates_json(space).dump(2) << "\n";
        } else {
            std::cout << "irrational case: " << space.raw_count << " rows ("
                      << space.raw_polynomial_count << " polynomials), " << space.unique_count
                      << " unique triples, " << space.triples.size()
                      << " certified triples (D != 1)\n";
        }
        return kExitOk;
    }
    std::cerr << "error: --case must be 'rational' or 'irrational'\n";
    return kExitUsage;
}

int cmd_portrait(const std::string& poly_text, const std::string& format) {
    Poly<Rational> f = parse_poly(poly_text);
    if (f.degree() != 3) {
        std::cerr << "error: degree out of supported range (portrait needs a cubic)\n";
        return kExitUsage;
    }
    PcfAnalysis an = is_pcf(f);
    if (!an.pcf) {
        std::cout << "not pcf: " << pcf::poly_to_text(f) << "\n";
        auto describe = [](const auto& orbits) {
            for (const auto& r : orbits)
                if (!r.preperiodic) {
                    std::cout << "wandering certificate: iterate " << r.witness.iterate << ", "
                              << (r.witness.kind == WitnessKind::AtPlace
                                      ? "place " + r.witness.place.str()
                                      : std::string("integrality"))
                              << ", point " << label_text(r.points.back()) << "\n";
                }
        };
        describe(an.rational_orbits);
        describe(an.quad_orbits);
        return kExitOk;
    }
    AnyPortrait g = portrait_of(an, f);
    if (format == "json")
        std::cout << portrait_to_json(g).dump(2) << "\n";
    else
        std::cout << portrait_to_dot(g);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified classification of post-critically finite cubic polynomials over Q"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "run the full classification");
    std::string json_path, markdown_path;
    int threads = 0;
    long max_iter = 1000000;
    enumerate->add_option("--json", json_path, "write the full report as JSON");
    enumerate->add_option("--markdown", markdown_path, "write the class table as Markdown");
    enumerate->add_option("--threads", threads, "worker threads (0 = auto)");
    enumerate->add_option("--max-iter", max_iter, "orbit iteration safety cap");

    auto* check = app.add_subcommand("check", "analyze one polynomial");
    std::string check_poly;
    check->add_option("polynomial", check_poly, "e.g. \"-2*z^3 + 3*z^2 + 1/2\" or \"[1/2, 0, 3, -2]\"")
        ->required();

    auto* search = app.add_subcommand("search-space", "dump a finite candidate space");
    std::string which_case;
    bool as_json = false;
    search->add_option("--case", which_case, "rational|irrational")->required();
    search->add_flag("--json", as_json, "emit the full JSON dump");

    auto* portrait_cmd = app.add_subcommand("portrait", "emit a critical portrait");
    std::string portrait_poly, portrait_format = "dot";
    portrait_cmd->add_option("polynomial", portrait_poly, "a PCF cubic over Q")->required();
    portrait_cmd->add_option("--format", portrait_format, "dot|json")
        ->check(CLI::IsMember({"dot", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(json_path, markdown_path, threads, max_iter);
        if (app.got_subcommand(check)) return cmd_check(check_poly);
        if (app.got_subcommand(search)) return cmd_search_space(which_case, as_json);
        if (app.got_subcommand(portrait_cmd)) return cmd_portrait(portrait_poly, portrait_format);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const pcf::PolyParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

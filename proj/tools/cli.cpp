#include "cli.hpp"

#include "mpm/cellular.hpp"
#include "mpm/errors.hpp"
#include "mpm/generate.hpp"
#include "mpm/invariants.hpp"
#include "mpm/io.hpp"
#include "mpm/lines.hpp"
#include "mpm/matchdist.hpp"
#include "mpm/onepar.hpp"
#include "mpm/presdist.hpp"
#include "mpm/wasserstein.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <set>
#include <sstream>

namespace mpm::cli {

namespace {

using nlohmann::json;

struct Common {
    bool json = false;
    bool exact = false;
    int precision = 12;
};

void add_common(CLI::App* app, Common& c) {
    app->add_flag("--json", c.json, "Machine-readable output");
    app->add_flag("--exact", c.exact, "Print rationals exactly where possible");
    app->add_option("--precision", c.precision, "Significant digits of decimal output")->check(CLI::Range(1, 30));
}

std::string num(double x, const Common& c) { return std::isinf(x) ? "inf" : format_double(x, c.precision); }

json jnum(double x) { return std::isinf(x) ? json("inf") : json(x); }

// Exact text of a norm value: the value itself when rational, else "<p-th power>^(1/p)".
std::optional<std::string> exact_text(const NormValue& v, const PExponent& p) {
    if (v.infinite) return "inf";
    if (!v.exact) return std::nullopt;
    if (p.is_infinite() || p.value() == 1) return format_rational(*v.exact);
    unsigned long k = *p.integer();
    mpz_class num, den;
    if (mpz_root(num.get_mpz_t(), v.exact->get_num_mpz_t(), k) &&
        mpz_root(den.get_mpz_t(), v.exact->get_den_mpz_t(), k))
        return format_rational(Rational(num, den));
    return "(" + format_rational(*v.exact) + ")^(1/" + std::to_string(k) + ")";
}

std::string norm_text(const NormValue& v, const PExponent& p, const Common& c) {
    if (c.exact)
        if (auto e = exact_text(v, p)) return *e;
    return v.infinite ? "inf" : num(v.value, c);
}

json norm_json(const NormValue& v, const PExponent& p, const Common& c) {
    json j = v.infinite ? json("inf") : json(v.value);
    if (c.exact)
        if (auto e = exact_text(v, p)) return json{{"value", j}, {"exact", *e}};
    return j;
}

std::string p_text(const PExponent& p) { return p.str(); }

json line_json(const lines::AdmissibleLine& l, const Common& c) {
    json v = json::array(), w = json::array();
    for (std::size_t i = 0; i < l.v().size(); ++i) {
        v.push_back(c.exact ? json(format_rational(l.v()[i])) : json(to_double(l.v()[i])));
        w.push_back(c.exact ? json(format_rational(l.w()[i])) : json(to_double(l.w()[i])));
    }
    return {{"v", v}, {"w", w}};
}

lines::AnyLine line_arg(const std::string& text) { return lines::parse_line(text); }

Presentation load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_file(path, text);
}

PExponent p_arg(const std::string& s) {
    try {
        return PExponent::parse(s);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--p", e.what());
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distances between finitely presented persistence modules", "mpm"};
    app.require_subcommand(1);
    Common common;
    std::string p_str = "1";
    double eps = 0.05;
    std::string a_path, b_path, out_path;
    std::function<void()> action;

    auto two_inputs = [&](CLI::App* s, const char* kind) {
        s->add_option("A", a_path, std::string("First ") + kind)->required();
        s->add_option("B", b_path, std::string("Second ") + kind)->required();
    };

    // wasserstein
    bool show_matching = false;
    auto* w = app.add_subcommand("wasserstein", "p-Wasserstein distance between two .bc barcodes");
    w->add_option("--p", p_str, "Exponent p >= 1 or inf");
    w->add_flag("--matching", show_matching, "Also print an optimal matching");
    add_common(w, common);
    two_inputs(w, "barcode");
    w->callback([&] {
        action = [&] {
            auto p = p_arg(p_str);
            Barcode B = parse_barcode(read_file(a_path)), C = parse_barcode(read_file(b_path));
            auto r = wasserstein::optimal(B, C, p);
            if (common.json) {
                json j{{"p", p_text(p)}, {"distance", norm_json(r.distance, p, common)}};
                if (show_matching) j["matching"] = r.matching.pairs;
                out << j.dump() << "\n";
                return;
            }
            out << norm_text(r.distance, p, common) << "\n";
            if (show_matching)
                for (auto [i, k] : r.matching.pairs) out << i << " " << k << "\n";
        };
    });

    // barcode
    std::string line_text;
    auto* bc = app.add_subcommand("barcode", "Barcode of a 1-parameter .fpm, or of a 2-parameter one along --line");
    bc->add_option("--line", line_text, "Admissible line \"v1,v2;w1,w2\"");
    bc->add_option("M", a_path, "Presentation")->required();
    bc->add_option("-o,--output", out_path, "Output file (default stdout)");
    add_common(bc, common);
    bc->callback([&] {
        action = [&] {
            Presentation M = load_presentation(a_path);
            Barcode B;
            if (!line_text.empty())
                B = lines::barcode_along_line(M, line_arg(line_text));
            else if (M.n_params() == 1)
                B = onepar::barcode_of(M);
            else
                throw CLI::ValidationError("--line", "required for 2-parameter input");
            B = canonical(B);
            if (common.json) {
                json bars = json::array();
                for (const Bar& b : B)
                    bars.push_back({format_rational(b.birth), b.essential ? "inf" : format_rational(b.death)});
                out << json{{"bars", bars}}.dump() << "\n";
                return;
            }
            emit(serialize_barcode(B), out_path, out);
        };
    });

    // restrict
    auto* rs = app.add_subcommand("restrict", "Restriction of a 2-parameter .fpm to a line, as a 1-parameter .fpm");
    rs->add_option("--line", line_text, "Admissible line \"v1,v2;w1,w2\"")->required();
    rs->add_option("M", a_path, "Presentation")->required();
    rs->add_option("-o,--output", out_path, "Output file (default stdout)");
    rs->callback([&] {
        action = [&] {
            emit(serialize_presentation(lines::restrict_presentation(load_presentation(a_path), line_arg(line_text))),
                 out_path, out);
        };
    });

    // matchdist
    matchdist::Options mopt;
    std::string mode = "corner";
    auto* md = app.add_subcommand("matchdist", "Certified bounds on the p-matching distance");
    md->add_option("--p", p_str, "Exponent p >= 1 or inf");
    md->add_option("--eps", eps, "Target gap between the bounds")->check(CLI::PositiveNumber);
    md->add_option("--max-depth", mopt.max_depth, "Subdivision depth limit");
    md->add_option("--max-lines", mopt.max_evaluations, "Line evaluation limit");
    md->add_option("--threads", mopt.threads, "Worker threads (default MPM_THREADS or all cores)");
    md->add_option("--bound", mode, "Local bound: corner or lipschitz")->check(CLI::IsMember({"corner", "lipschitz"}));
    add_common(md, common);
    two_inputs(md, "presentation");

    auto report_json = [&](const matchdist::DistanceReport& r) {
        json j{{"p", p_text(r.p)},
               {"epsilon", r.epsilon},
               {"lower", jnum(r.lower)},
               {"upper", jnum(r.upper)},
               {"lines_evaluated", r.lines_evaluated},
               {"converged", r.converged},
               {"max_depth_reached", r.max_depth_reached}};
        j["argmax_line"] = r.argmax_line ? line_json(*r.argmax_line, common) : json(nullptr);
        return j;
    };
    auto prepare_options = [&] {
        mopt.epsilon = eps;
        mopt.mode = mode == "corner" ? matchdist::BoundMode::Corner : matchdist::BoundMode::Lipschitz;
    };
    int status = Ok;
    md->callback([&] {
        action = [&] {
            auto p = p_arg(p_str);
            prepare_options();
            auto r = matchdist::approx_matching_distance(load_presentation(a_path), load_presentation(b_path), p, mopt);
            if (common.json) {
                out << report_json(r).dump() << "\n";
            } else {
                out << "lower " << num(r.lower, common) << "\nupper " << num(r.upper, common) << "\nlines "
                    << r.lines_evaluated << "\n";
                if (r.argmax_line) out << "argmax " << lines::format_line(*r.argmax_line) << "\n";
            }
            if (!r.converged) {
                err << "mpm: stopped before the bounds met (depth or line limit)\n";
                status = Failed;
            }
        };
    });

    // labeldist
    auto* ld = app.add_subcommand("labeldist", "Label distance of two presentations with the same matrix");
    ld->add_option("--p", p_str, "Exponent p >= 1 or inf");
    add_common(ld, common);
    two_inputs(ld, "presentation");
    ld->callback([&] {
        action = [&] {
            auto p = p_arg(p_str);
            auto d = presdist::label_distance(load_presentation(a_path), load_presentation(b_path), p);
            if (common.json)
                out << json{{"p", p_text(p)}, {"distance", norm_json(d, p, common)}}.dump() << "\n";
            else
                out << norm_text(d, p, common) << "\n";
        };
    });

    // bounds
    auto* bd = app.add_subcommand("bounds", "Lower (matching distance) and upper (presentation pairing) bounds");
    bd->add_option("--p", p_str, "Exponent p >= 1 or inf");
    bd->add_option("--eps", eps, "Target gap of the lower bound search")->check(CLI::PositiveNumber);
    bd->add_option("--threads", mopt.threads, "Worker threads");
    add_common(bd, common);
    two_inputs(bd, "presentation");
    bd->callback([&] {
        action = [&] {
            auto p = p_arg(p_str);
            prepare_options();
            auto r = presdist::bounds(load_presentation(a_path), load_presentation(b_path), p, mopt);
            if (common.json) {
                json j{{"p", p_text(p)},
                       {"epsilon", eps},
                       {"lower", jnum(r.lower.lower)},
                       {"matching_upper", jnum(r.lower.upper)},
                       {"upper", r.upper ? norm_json(*r.upper, p, common) : json(nullptr)},
                       {"notes", r.notes}};
                out << j.dump() << "\n";
            } else {
                out << "lower " << num(r.lower.lower, common) << "\nupper "
                    << (r.upper ? norm_text(*r.upper, p, common) : std::string("none")) << "\n";
                for (const auto& n : r.notes) out << "# " << n << "\n";
            }
            if (!r.lower.converged) status = Failed;
        };
    });

    // homology
    std::size_t degree = 0;
    auto* hm = app.add_subcommand("homology", "Presentation of the degree-j homology of a .cwf complex");
    hm->add_option("--deg", degree, "Homological degree")->required();
    hm->add_option("X", a_path, "Complex")->required();
    hm->add_option("-o,--output", out_path, "Output file (default stdout)");
    hm->callback([&] {
        action = [&] {
            auto X = cellular::parse_complex(read_file(a_path));
            emit(serialize_presentation(cellular::homology_presentation(X, degree)), out_path, out);
        };
    });

    // lift
    std::string f_path, g_path;
    auto* lf = app.add_subcommand("lift", "Complexes whose first homology realizes two paired presentations");
    two_inputs(lf, "presentation");
    lf->add_option("--f", f_path, "Output .cwf for the first filtration")->required();
    lf->add_option("--g", g_path, "Output .cwf for the second filtration")->required();
    lf->callback([&] {
        action = [&] {
            auto L = cellular::lift_presentations(load_presentation(a_path), load_presentation(b_path));
            write_file(f_path, cellular::serialize_complex(L.f));
            write_file(g_path, cellular::serialize_complex(L.g));
        };
    });

    // hilbert
    std::vector<std::string> at;
    auto* hb = app.add_subcommand("hilbert", "Hilbert function values (CSV over the label grid by default)");
    hb->add_option("M", a_path, "Presentation")->required();
    hb->add_option("--at", at, "Grade \"x,y\" (repeatable)");
    add_common(hb, common);
    hb->callback([&] {
        action = [&] {
            Presentation M = load_presentation(a_path);
            std::vector<Grade> grades;
            for (const auto& s : at) {
                std::vector<Rational> c;
                std::stringstream ss(s);
                for (std::string t; std::getline(ss, t, ',');) c.push_back(parse_rational(t));
                if (c.size() != M.n_params()) throw CLI::ValidationError("--at", "wrong number of coordinates");
                grades.push_back(c.size() == 1 ? Grade(c[0]) : Grade(c[0], c[1]));
            }
            if (grades.empty()) {
                std::vector<std::set<Rational>> coords(M.n_params());
                for (const auto& g : M.labels())
                    for (std::size_t k = 0; k < g.size(); ++k) coords[k].insert(g[k]);
                for (const auto& x : coords[0]) {
                    if (M.n_params() == 1) {
                        grades.emplace_back(x);
                        continue;
                    }
                    for (const auto& y : coords[1]) grades.emplace_back(x, y);
                }
            }
            json rows = json::array();
            if (!common.json) out << (M.n_params() == 1 ? "x,dim\n" : "x,y,dim\n");
            for (const auto& g : grades) {
                std::size_t d = hilbert_dim(M, g);
                std::vector<std::string> cs;
                for (std::size_t k = 0; k < g.size(); ++k) cs.push_back(format_rational(g[k]));
                if (common.json) {
                    rows.push_back({{"grade", cs}, {"dim", d}});
                } else {
                    for (const auto& c : cs) out << c << ",";
                    out << d << "\n";
                }
            }
            if (common.json) out << rows.dump() << "\n";
        };
    });

    // gen
    std::uint64_t seed = 1;
    std::string what;
    std::size_t n_params = 2, rows = 3, cols = 3, vertices = 5, edges = 7, triangles = 3;
    std::uint32_t field = 2;
    int spread = 6, perturb = 0;
    auto* gn = app.add_subcommand("gen", "Random fixtures: a presentation or a simplicial complex");
    gn->add_option("kind", what, "presentation | complex")->required()->check(CLI::IsMember({"presentation", "complex"}));
    gn->add_option("--seed", seed, "Random seed");
    gn->add_option("--params", n_params, "Number of parameters")->check(CLI::Range(1, 2));
    gn->add_option("--field", field, "Prime field size");
    gn->add_option("--rows", rows, "Presentation rows");
    gn->add_option("--cols", cols, "Presentation columns");
    gn->add_option("--vertices", vertices, "Complex vertices");
    gn->add_option("--edges", edges, "Complex edges");
    gn->add_option("--triangles", triangles, "Complex triangles");
    gn->add_option("--spread", spread, "Grade range")->check(CLI::NonNegativeNumber);
    gn->add_option("--perturb", perturb, "Also write a perturbed copy of the complex with shifts up to this")
        ->check(CLI::NonNegativeNumber);
    gn->add_option("-o,--output", out_path, "Output file (default stdout)");
    gn->add_option("--perturbed-output", g_path, "Output file for the perturbed complex");
    gn->callback([&] {
        action = [&] {
            if (!is_prime(field)) throw CLI::ValidationError("--field", "must be prime");
            generate::Rng rng(seed);
            if (what == "presentation") {
                emit(serialize_presentation(generate::random_presentation(rng, n_params, rows, cols, field, spread)),
                     out_path, out);
                return;
            }
            generate::ComplexShape shape{vertices, edges, triangles, n_params, field, spread};
            auto X = generate::random_complex(rng, shape);
            emit(cellular::serialize_complex(X), out_path, out);
            if (perturb > 0) {
                if (g_path.empty()) throw CLI::ValidationError("--perturbed-output", "required with --perturb");
                write_file(g_path, cellular::serialize_complex(generate::perturb(rng, X, perturb)));
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "mpm: " << e.what() << "\n";
        return Usage;
    }
    try {
        action();
    } catch (const CLI::ValidationError& e) {
        err << "mpm: " << e.what() << "\n";
        return Usage;
    } catch (const ParseError& e) {
        err << "mpm: " << e.what() << "\n";
        return BadData;
    } catch (const DataError& e) {
        err << "mpm: " << e.what() << "\n";
        return BadData;
    } catch (const ComputationError& e) {
        err << "mpm: " << e.what() << "\n";
        return Failed;
    } catch (const std::exception& e) {
        err << "mpm: " << e.what() << "\n";
        return Failed;
    }
    return status;
}

}  // namespace mpm::cli

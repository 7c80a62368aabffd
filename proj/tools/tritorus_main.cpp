// Command-line front end for the tritorus shared library. Talks to the
// C API only; stdout carries machine-readable JSON/CSV, human summaries go
// to stderr.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tritorus.h"

using nlohmann::json;

namespace {

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) die(2, std::string(what) + " expects 'x,y'");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        die(2, std::string(what) + ": cannot parse '" + text + "'");
    }
}

std::string fmt_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct TauHandle {
    tt_tau* ptr = nullptr;
    ~TauHandle() { tt_tau_destroy(ptr); }
};

struct PolyHandle {
    tt_polygon* ptr = nullptr;
    ~PolyHandle() { tt_polygon_destroy(ptr); }
};

void check(tt_status st, const std::string& context) {
    if (st != TT_OK)
        die(1, context + ": " + tt_status_name(st) + " (" + tt_last_error() + ")");
}

// Resolves --tau, applying modular reduction only when --reduce was given.
void resolve_tau(const std::string& tau_text, bool reduce, TauHandle& out) {
    const auto [a, b] = parse_pair(tau_text, "--tau");
    if (b <= 0.0) die(2, "--tau: need b > 0");
    if (tt_tau_in_domain(a, b)) {
        check(tt_tau_create(a, b, &out.ptr), "tau");
        return;
    }
    if (!reduce)
        die(2, "tau lies outside the fundamental domain; pass --reduce to map it there");
    char word[256];
    check(tt_tau_reduce(a, b, &out.ptr, word, sizeof word), "reduce");
    double ra = 0.0, rb = 0.0;
    tt_tau_get(out.ptr, &ra, &rb);
    std::cerr << "reduced tau to (" << fmt_g17(ra) << ", " << fmt_g17(rb)
              << ") via " << word << "\n";
}

json polygon_to_json(const tt_polygon* poly) {
    int n = 0;
    check(tt_polygon_size(poly, &n), "polygon");
    std::vector<double> xy(static_cast<std::size_t>(2 * n));
    int written = 0;
    check(tt_polygon_vertices(poly, xy.data(), n, &written), "polygon");
    json verts = json::array();
    for (int i = 0; i < written; ++i)
        verts.push_back({xy[2 * static_cast<std::size_t>(i)],
                         xy[2 * static_cast<std::size_t>(i) + 1]});
    return verts;
}

void load_polygon_json(const std::string& path, PolyHandle& out) {
    std::ifstream in(path);
    if (!in) die(2, "cannot open polygon file " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        die(2, path + ": " + e.what());
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        die(2, path + ": expected {\"vertices\": [[x,y], ...]}");
    std::vector<double> xy;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array() || v.size() != 2) die(2, path + ": malformed vertex");
        xy.push_back(v[0].get<double>());
        xy.push_back(v[1].get<double>());
    }
    check(tt_polygon_create(xy.data(), static_cast<int>(xy.size() / 2), &out.ptr), path);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path);
        if (!out) die(1, "cannot write " + output_path);
        out << text;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"homotopy statistics of random geodesic triangles on flat tori"};
    app.require_subcommand(1);

    std::string tau_text;
    bool reduce = false;
    std::string output_path;
    long long samples = 1000000;
    std::uint64_t seed = 1;
    int workers = 1;

    auto add_tau = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--tau", tau_text, "torus shape as 'a,b'");
        if (required) opt->required();
        cmd->add_flag("--reduce", reduce, "reduce tau into the fundamental domain first");
    };

    // eval
    auto* eval = app.add_subcommand("eval", "closed-form probability P(tau)");
    add_tau(eval);

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of P(tau)");
    add_tau(mc);
    mc->add_option("--samples", samples, "triangle count (>= 100)");
    mc->add_option("--seed", seed, "random seed");
    mc->add_option("--workers", workers, "deterministic substream count");

    // scan
    auto* scan = app.add_subcommand("scan", "CSV scan of P over a grid in the domain");
    std::string grid_text = "32,32";
    std::string brange_text = "0.8,3.0";
    bool scan_mc = false;
    long long scan_samples = 100000;
    scan->add_option("--grid", grid_text, "grid as 'na,nb'");
    scan->add_option("--b-range", brange_text, "b range as 'lo,hi'");
    scan->add_flag("--mc", scan_mc, "add Monte Carlo columns");
    scan->add_option("--samples", scan_samples, "samples per grid point with --mc");
    scan->add_option("--seed", seed, "random seed with --mc");
    scan->add_option("--workers", workers, "substreams per estimate with --mc");
    scan->add_option("--output", output_path, "write CSV here instead of stdout");

    // average
    auto* avg = app.add_subcommand("average", "moduli-space average of P");
    double b_max = 100.0, tol = 1e-6;
    bool no_tail = false;
    avg->add_option("--b-max", b_max, "truncation height (>= 10)");
    avg->add_option("--tol", tol, "quadrature tolerance in (0, 1e-2]");
    avg->add_flag("--no-tail", no_tail, "skip the analytic tail above b-max");

    // overlap
    auto* ovl = app.add_subcommand("overlap", "triple overlap functional F(A,B,C)");
    std::string family;
    std::string st_text = "0,0";
    std::string method = "closed";
    long long budget = 200000;
    std::vector<std::string> shape_files;
    ovl->add_option("--family", family, "one of qqq, tqq, htt, hht, hhh");
    ovl->add_option("--st", st_text, "legs 's,t' in [0,1/2] for the family shapes");
    ovl->add_option("--method", method, "closed, mc or quad");
    ovl->add_option("--budget", budget, "samples or cells for numeric methods");
    ovl->add_option("--seed", seed, "random seed for mc");
    ovl->add_option("--shapes", shape_files,
                    "three polygon JSON files A B C (numeric methods only)")
        ->expected(3);

    // dirichlet
    auto* dir = app.add_subcommand("dirichlet", "Dirichlet domain of the lattice <1, tau>");
    add_tau(dir);
    dir->add_option("--output", output_path, "write JSON here instead of stdout");

    // verify
    auto* ver = app.add_subcommand("verify", "run the invariant suite");
    std::string verify_budget = "quick";
    ver->add_option("--budget", verify_budget, "quick or full");
    ver->add_option("--seed", seed, "random seed for stochastic checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (eval->parsed()) {
        TauHandle tau;
        resolve_tau(tau_text, reduce, tau);
        double p = 0.0;
        check(tt_p_closed_form(tau.ptr, &p), "eval");
        std::cout << fmt_g17(p) << "\n";
        double a = 0.0, b = 0.0;
        tt_tau_get(tau.ptr, &a, &b);
        std::cerr << "P(" << fmt_g17(a) << " + " << fmt_g17(b) << "i) = " << fmt_g17(p)
                  << "\n";
        return 0;
    }

    if (mc->parsed()) {
        TauHandle tau;
        resolve_tau(tau_text, reduce, tau);
        tt_estimate est{};
        check(tt_p_monte_carlo(tau.ptr, samples, seed, workers, &est), "mc");
        double a = 0.0, b = 0.0;
        tt_tau_get(tau.ptr, &a, &b);
        json rec{{"tau", {a, b}},       {"mean", est.mean}, {"std_error", est.std_error},
                 {"n", est.n},          {"seed", est.seed}, {"workers", workers}};
        std::cout << rec.dump() << "\n";
        std::cerr << "P ~ " << est.mean << " +- " << est.std_error << " (n=" << est.n
                  << ", seed=" << est.seed << ")\n";
        return 0;
    }

    if (scan->parsed()) {
        const auto [na_d, nb_d] = parse_pair(grid_text, "--grid");
        const auto [b_lo, b_hi] = parse_pair(brange_text, "--b-range");
        const int na = static_cast<int>(na_d), nb = static_cast<int>(nb_d);
        if (na < 1 || nb < 1) die(2, "--grid: need positive counts");
        std::ostringstream csv;
        csv << "a,b,p_closed,p_mc,mc_stderr,n,seed\n";
        for (int i = 0; i < na; ++i) {
            const double a = -0.5 + static_cast<double>(i + 1) / na;
            for (int j = 0; j < nb; ++j) {
                const double b = nb == 1 ? b_lo : b_lo + (b_hi - b_lo) * j / (nb - 1);
                if (!tt_tau_in_domain(a, b)) continue;
                TauHandle tau;
                check(tt_tau_create(a, b, &tau.ptr), "scan");
                double p = 0.0;
                check(tt_p_closed_form(tau.ptr, &p), "scan");
                csv << fmt_g17(a) << ',' << fmt_g17(b) << ',' << fmt_g17(p) << ',';
                if (scan_mc) {
                    tt_estimate est{};
                    check(tt_p_monte_carlo(tau.ptr, scan_samples, seed, workers, &est),
                          "scan");
                    csv << fmt_g17(est.mean) << ',' << fmt_g17(est.std_error) << ','
                        << est.n << ',' << est.seed;
                }
                csv << "\n";
            }
        }
        emit(csv.str(), output_path);
        return 0;
    }

    if (avg->parsed()) {
        double value = 0.0;
        long long cells = 0;
        const tt_status st = tt_moduli_average(b_max, tol, no_tail ? 0 : 1, &value, &cells);
        if (st != TT_OK && st != TT_ERR_NO_CONVERGENCE)
            check(st, "average");
        json rec{{"value", value},
                 {"b_max", b_max},
                 {"tol", tol},
                 {"tail_included", !no_tail},
                 {"cells", cells}};
        std::cout << rec.dump() << "\n";
        if (st == TT_ERR_NO_CONVERGENCE) {
            std::cerr << "warning: cell budget exhausted, value is partial\n";
            return 1;
        }
        return 0;
    }

    if (ovl->parsed()) {
        const auto [s, t] = parse_pair(st_text, "--st");
        const bool have_files = !shape_files.empty();
        if (!have_files && family.empty())
            die(2, "overlap: pass --family or --shapes");

        if (method == "closed") {
            if (have_files) die(2, "overlap: closed form needs --family");
            double value = 0.0;
            tt_status st_code = TT_OK;
            if (family == "qqq") st_code = tt_overlap_qqq(&value);
            else if (family == "tqq") st_code = tt_overlap_tqq(s, t, &value);
            else if (family == "htt") st_code = tt_overlap_htt(s, t, &value);
            else if (family == "hht") st_code = tt_overlap_hht(s, t, &value);
            else if (family == "hhh") st_code = tt_overlap_hhh(s, t, &value);
            else die(2, "overlap: unknown family " + family);
            check(st_code, "overlap");
            json rec{{"value", value}, {"std_error", 0.0}, {"n", 1},
                     {"method", "closed-form"}, {"seed", 0}};
            std::cout << rec.dump() << "\n";
            return 0;
        }

        if (method != "mc" && method != "quad")
            die(2, "overlap: --method must be closed, mc or quad");
        const tt_overlap_method m =
            method == "mc" ? TT_OVERLAP_MONTE_CARLO : TT_OVERLAP_MIDPOINT_QUADRATURE;

        PolyHandle pa, pb, pc;
        if (have_files) {
            load_polygon_json(shape_files[0], pa);
            load_polygon_json(shape_files[1], pb);
            load_polygon_json(shape_files[2], pc);
        } else if (family == "qqq") {
            check(tt_polygon_unit_square(&pa.ptr), "overlap");
            check(tt_polygon_unit_square(&pb.ptr), "overlap");
            check(tt_polygon_unit_square(&pc.ptr), "overlap");
        } else if (family == "tqq") {
            check(tt_polygon_corner_triangle(s, t, &pa.ptr), "overlap");
            check(tt_polygon_unit_square(&pb.ptr), "overlap");
            check(tt_polygon_unit_square(&pc.ptr), "overlap");
        } else if (family == "htt") {
            check(tt_polygon_notched_square(s, t, &pa.ptr), "overlap");
            check(tt_polygon_corner_triangle(s, t, &pb.ptr), "overlap");
            check(tt_polygon_corner_triangle(s, t, &pc.ptr), "overlap");
        } else if (family == "hht") {
            check(tt_polygon_notched_square(s, t, &pa.ptr), "overlap");
            check(tt_polygon_notched_square(s, t, &pb.ptr), "overlap");
            check(tt_polygon_corner_triangle(s, t, &pc.ptr), "overlap");
        } else if (family == "hhh") {
            check(tt_polygon_notched_square(s, t, &pa.ptr), "overlap");
            check(tt_polygon_notched_square(s, t, &pb.ptr), "overlap");
            check(tt_polygon_notched_square(s, t, &pc.ptr), "overlap");
        } else {
            die(2, "overlap: unknown family " + family);
        }

        tt_estimate est{};
        check(tt_overlap_numeric(pa.ptr, pb.ptr, pc.ptr, m, budget, seed, &est), "overlap");
        json rec{{"value", est.mean},
                 {"std_error", est.std_error},
                 {"n", est.n},
                 {"method", m == TT_OVERLAP_MONTE_CARLO ? "monte-carlo" : "midpoint-quadrature"},
                 {"seed", est.seed}};
        std::cout << rec.dump() << "\n";
        return 0;
    }

    if (dir->parsed()) {
        TauHandle tau;
        resolve_tau(tau_text, reduce, tau);
        PolyHandle hex;
        double alpha = 0.0, beta = 0.0;
        check(tt_dirichlet_domain(tau.ptr, &hex.ptr, &alpha, &beta), "dirichlet");
        double a = 0.0, b = 0.0, hex_area = 0.0;
        tt_tau_get(tau.ptr, &a, &b);
        check(tt_polygon_area(hex.ptr, &hex_area), "dirichlet");
        json rec{{"tau", {a, b}},
                 {"alpha", alpha},
                 {"beta", beta},
                 {"vertices", polygon_to_json(hex.ptr)},
                 {"area", hex_area}};
        emit(rec.dump() + "\n", output_path);
        return 0;
    }

    if (ver->parsed()) {
        if (verify_budget != "quick" && verify_budget != "full")
            die(2, "verify: --budget must be quick or full");
        struct Tally {
            int passed = 0;
            json checks = json::array();
        } tally;
        auto report = [](const char* name, int ok, const char* detail, void* user) {
            auto* t = static_cast<Tally*>(user);
            std::cerr << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
            if (ok) ++t->passed;
            t->checks.push_back({{"name", name}, {"ok", ok != 0}, {"detail", detail}});
        };
        int failures = 0;
        check(tt_verify(verify_budget == "full" ? TT_VERIFY_FULL : TT_VERIFY_QUICK, seed,
                        report, &tally, &failures),
              "verify");
        json rec{{"passed", tally.passed}, {"failed", failures}, {"seed", seed},
                 {"budget", verify_budget}, {"checks", tally.checks}};
        std::cout << rec.dump() << "\n";
        return failures == 0 ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

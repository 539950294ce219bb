#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "elliptica/faulhaber.hpp"
#include "elliptica/kdv.hpp"
#include "elliptica/lame.hpp"
#include "elliptica/numeval.hpp"
#include "elliptica/poly_io.hpp"
#include "elliptica/verify.hpp"
#include "elliptica/weierstrass.hpp"

namespace {

using namespace elliptica;
using nlohmann::json;

constexpr int exit_usage = 2;
constexpr int exit_failed = 1;

// Library-level argument problems map to the usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "json";
    std::string path;

    void write(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream out(path);
        if (!out) throw UsageError("cannot write " + path);
        out << body;
    }
};

std::string csv_terms(const json& doc) {
    std::ostringstream os;
    os << "coeff";
    for (const auto& s : doc.at("symbols")) os << ',' << s.get<std::string>();
    os << '\n';
    for (const auto& t : doc.at("terms")) {
        os << t.at("coeff").get<std::string>();
        for (const auto& e : t.at("exp")) os << ',' << e.get<unsigned>();
        os << '\n';
    }
    return os.str();
}

template <class P>
std::string render(const P& p, const std::string& format) {
    if (format == "text") return io::to_text(p) + "\n";
    if (format == "latex") return io::to_latex(p) + "\n";
    if (format == "csv") return csv_terms(io::to_json(p));
    return io::to_json(p).dump(1) + "\n";
}

std::string render(const CohomElem& c, const std::string& format) {
    if (format == "text") return io::to_text(c) + "\n";
    if (format == "latex") return io::to_latex(c) + "\n";
    if (format == "csv") return csv_terms(io::to_json(c.to_poly()));
    return io::to_json(c.to_poly()).dump(1) + "\n";
}

CLI::Option* add_format(CLI::App* sub, Output& out, std::vector<std::string> allowed) {
    sub->add_option("-o,--output", out.path, "Write to FILE instead of stdout");
    return sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

CLI::Validator even_at_least(int lo) {
    return CLI::Validator(
        [lo](const std::string& s) -> std::string {
            int v = 0;
            if (!CLI::detail::lexical_cast(s, v)) return "not an integer: " + s;
            if (v < lo || v % 2 != 0) return "expected an even index >= " + std::to_string(lo) + ", got " + s;
            return {};
        },
        "EVEN>=" + std::to_string(lo));
}

std::string verify_report(const std::vector<verify::CriterionResult>& results, const std::string& format,
                          bool verbose) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"criterion", r.id},
                           {"title", r.title},
                           {"passed", r.passed},
                           {"checks", r.checks},
                           {"failures", r.failures},
                           {"notes", r.notes}});
        return arr.dump(1) + "\n";
    }
    std::ostringstream os;
    for (const auto& r : results) {
        os << verify::summary_line(r) << '\n';
        if (!verbose) continue;
        for (const auto& f : r.failures) os << "  fail: " << f << '\n';
        for (const auto& n : r.notes) os << "  note: " << n << '\n';
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact KdV densities, elliptic Faulhaber polynomials and Lame densities of states"};
    app.require_subcommand(1);
    Output out;
    std::function<int()> action;

    // kdv
    int kdv_k = 0;
    bool raw_sigma = false;
    auto* kdv_cmd = app.add_subcommand("kdv", "KdV density T_k in canonical form");
    kdv_cmd->add_option("--k", kdv_k, "Index k >= 1")->required()->check(CLI::Range(1, 60));
    kdv_cmd->add_flag("--raw-sigma", raw_sigma, "Print sigma_{2k-1} before canonicalization");
    add_format(kdv_cmd, out, {"json", "text", "latex", "csv"});
    kdv_cmd->callback([&] {
        action = [&] {
            out.write(render(raw_sigma ? kdv::sigma(2 * kdv_k - 1) : kdv::density(kdv_k).body, out.format));
            return 0;
        };
    });

    // halphen
    int h_n = 0, h_r = 0;
    auto* halphen_cmd = app.add_subcommand("halphen", "Halphen coefficient B_r^(n)");
    halphen_cmd->add_option("--n", h_n, "n >= 0")->required()->check(CLI::NonNegativeNumber);
    halphen_cmd->add_option("--r", h_r, "0 <= r <= n")->required()->check(CLI::NonNegativeNumber);
    add_format(halphen_cmd, out, {"json", "text", "latex", "csv"});
    halphen_cmd->callback([&] {
        action = [&] {
            if (h_r > h_n) throw UsageError("--r must not exceed --n");
            out.write(render(weierstrass::halphen(h_n, h_r), out.format));
            return 0;
        };
    });

    // kn
    int kn_n = 0;
    bool kn_general = false, kn_reduced = false, kn_lemn = false, kn_equi = false;
    auto* kn_cmd = app.add_subcommand("kn", "Period integral K_n of wp^n");
    kn_cmd->add_option("--n", kn_n, "n >= 0")->required()->check(CLI::NonNegativeNumber);
    auto* o_gen = kn_cmd->add_flag("--general", kn_general, "K_n^* in the basis (omega, xi) (default)");
    auto* o_red = kn_cmd->add_flag("--reduced", kn_reduced, "g1 = 0, basis (omega, eta)");
    auto* o_lem = kn_cmd->add_flag("--lemniscatic", kn_lemn, "Closed form at g3 = 0");
    auto* o_equ = kn_cmd->add_flag("--equianharmonic", kn_equi, "Closed form at g2 = 0");
    o_gen->excludes(o_red, o_lem, o_equ);
    o_red->excludes(o_lem, o_equ);
    o_lem->excludes(o_equ);
    add_format(kn_cmd, out, {"json", "text", "latex", "csv"});
    kn_cmd->callback([&] {
        action = [&] {
            CohomElem k = kn_reduced  ? weierstrass::period_integral_reduced(kn_n)
                          : kn_lemn   ? weierstrass::kn_lemniscatic(kn_n)
                          : kn_equi   ? weierstrass::kn_equianharmonic(kn_n)
                                      : weierstrass::period_integral_general(kn_n);
            out.write(render(k, out.format));
            return 0;
        };
    });

    // faulhaber
    int f_m = 0;
    bool f_general = false, f_w = false, f_j = false, f_classical = false;
    auto* f_cmd = app.add_subcommand("faulhaber", "Elliptic or classical Faulhaber polynomial");
    f_cmd->add_option("--m", f_m, "m >= 1")->required()->check(CLI::Range(1, 40));
    auto* f_o1 = f_cmd->add_flag("--general", f_general, "General form in (omega, xi) (default)");
    auto* f_o2 = f_cmd->add_flag("--weierstrass", f_w, "g1 = 0, basis (omega, eta)");
    auto* f_o3 = f_cmd->add_flag("--jacobi", f_j, "g3 = 0, basis (omega, xi)");
    auto* f_o4 = f_cmd->add_flag("--classical", f_classical, "Classical F_m(lambda)");
    f_o1->excludes(f_o2, f_o3, f_o4);
    f_o2->excludes(f_o3, f_o4);
    f_o3->excludes(f_o4);
    add_format(f_cmd, out, {"json", "text", "latex", "csv"});
    f_cmd->callback([&] {
        action = [&] {
            if (f_classical) {
                out.write(render(faulhaber::classical_faulhaber(f_m), out.format));
                return 0;
            }
            const CohomElem f = f_w   ? faulhaber::reduced_faulhaber_W(f_m)
                                : f_j ? faulhaber::reduced_faulhaber_J(f_m)
                                      : faulhaber::elliptic_faulhaber(f_m);
            out.write(render(f, out.format));
            return 0;
        };
    });

    // ebernoulli
    int eb_index = 0;
    std::string eb_route = "all";
    auto* eb_cmd = app.add_subcommand("ebernoulli", "Elliptic Bernoulli number of even index 2N");
    eb_cmd->add_option("--n", eb_index, "Even index 2N >= 2")->required()->check(even_at_least(2));
    eb_cmd->add_option("--route", eb_route, "direct, period, halphen, or all (cross-checked)")
        ->check(CLI::IsMember({"all", "direct", "period", "halphen"}));
    add_format(eb_cmd, out, {"json", "text", "latex", "csv"});
    eb_cmd->callback([&] {
        action = [&] {
            using faulhaber::BernoulliRoute;
            const CohomElem b = eb_route == "direct"    ? faulhaber::elliptic_bernoulli(eb_index, BernoulliRoute::direct)
                                : eb_route == "period"  ? faulhaber::elliptic_bernoulli(eb_index, BernoulliRoute::period_expansion)
                                : eb_route == "halphen" ? faulhaber::elliptic_bernoulli(eb_index, BernoulliRoute::halphen)
                                                        : faulhaber::elliptic_bernoulli(eb_index);
            out.write(render(b, out.format));
            return 0;
        };
    });

    // bh
    int bh_index = 0;
    auto* bh_cmd = app.add_subcommand("bh", "Bernoulli-Hurwitz number BH_2K");
    bh_cmd->add_option("--n", bh_index, "Even index 2K >= 4")->required()->check(even_at_least(4));
    add_format(bh_cmd, out, {"json", "text", "latex", "csv"});
    bh_cmd->callback([&] {
        action = [&] {
            out.write(render(weierstrass::bernoulli_hurwitz(bh_index), out.format));
            return 0;
        };
    });

    // lame
    std::string lame_n;
    std::optional<int> lame_order;
    std::string spectral_file;
    auto* lame_cmd = app.add_subcommand("lame", "Numerator coefficients of the Lame density of states");
    lame_cmd->add_option("--n", lame_n, "Positive integer n or 'sym'")->required();
    lame_cmd->add_option("--order", lame_order, "Number of coefficients a_1..a_K")->check(CLI::Range(0, 64));
    lame_cmd->add_option("--spectral-table", spectral_file, "Spectral table JSON (symbolic n only)")
        ->check(CLI::ExistingFile);
    add_format(lame_cmd, out, {"json", "text", "latex", "csv"});
    lame_cmd->callback([&] {
        action = [&] {
            std::optional<int> n;
            if (lame_n != "sym") {
                int v = 0;
                if (!CLI::detail::lexical_cast(lame_n, v) || v < 1)
                    throw UsageError("--n must be a positive integer or 'sym', got '" + lame_n + "'");
                n = v;
            }
            lame::SpectralPoly spectral;
            if (!spectral_file.empty()) {
                if (n) throw UsageError("--spectral-table applies to --n sym only");
                spectral = lame::load_spectral_table_file(spectral_file);
            } else {
                spectral = n ? lame::spectral_from_radicand(*n) : lame::builtin_spectral();
            }
            const int order = lame_order.value_or(n ? *n : 4);
            const lame::DosNumerator dos = lame::match_numerator(spectral, order);
            if (out.format == "json") {
                json doc{{"n", n ? json(*n) : json("sym")}, {"order", order}, {"a", json::array()}};
                for (int k = 1; k <= order; ++k) doc["a"].push_back(io::to_json(dos.a[static_cast<std::size_t>(k)]));
                if (n && order >= *n) doc["numerator"] = io::to_json(dos.numerator());
                out.write(doc.dump(1) + "\n");
                return 0;
            }
            std::ostringstream os;
            if (out.format == "csv") os << "k,a_k\n";
            for (int k = 1; k <= order; ++k) {
                const MultiPoly& a = dos.a[static_cast<std::size_t>(k)];
                if (out.format == "csv")
                    os << k << ",\"" << io::to_text(a) << "\"\n";
                else if (out.format == "latex")
                    os << "a_{" << k << "} &= " << io::to_latex(a) << " \\\\\n";
                else
                    os << "a_" << k << " = " << io::to_text(a) << '\n';
            }
            if (n && order >= *n && out.format == "text") os << "P = " << io::to_text(dos.numerator()) << '\n';
            if (n && order >= *n && out.format == "latex") os << "P_{" << *n << "}(E) &= " << io::to_latex(dos.numerator()) << '\n';
            out.write(os.str());
            return 0;
        };
    });

    // phi
    int phi_m = 8;
    double g2 = 4.0, g3 = 0.0, xmin = -1.5, xmax = 0.5;
    int points = 201;
    bool phi_classical = false;
    auto* phi_cmd = app.add_subcommand("phi", "Normalized Faulhaber curve Phi_m(x) against (1-cos 2 pi x)/(2 pi^2)");
    phi_cmd->add_option("--m", phi_m, "m >= 2")->check(CLI::Range(2, 40));
    phi_cmd->add_option("--g2", g2, "Invariant g2");
    phi_cmd->add_option("--g3", g3, "Invariant g3");
    phi_cmd->add_option("--xmin", xmin);
    phi_cmd->add_option("--xmax", xmax);
    phi_cmd->add_option("--points", points)->check(CLI::Range(2, 1000000));
    phi_cmd->add_flag("--classical", phi_classical, "Use the g2 = g3 = 0 degeneration");
    auto* phi_fmt = add_format(phi_cmd, out, {"csv", "json"});
    phi_cmd->callback([&] {
        if (phi_fmt->count() == 0) out.format = "csv";
        action = [&] {
            std::function<double(double)> phi;
            if (phi_classical) {
                phi = numeval::ClassicalPhi(phi_m);
            } else {
                phi = numeval::PhiEvaluator(phi_m, numeval::RealCurve::from_invariants(g2, g3));
            }
            const auto grid = numeval::linspace(xmin, xmax, points);
            std::ostringstream os;
            os.precision(17);
            if (out.format == "csv") {
                os << "x,phi,target\n";
                for (double x : grid) os << x << ',' << phi(x) << ',' << numeval::conjecture_target(x) << '\n';
            } else {
                json rows = json::array();
                for (double x : grid) rows.push_back({{"x", x}, {"phi", phi(x)}, {"target", numeval::conjecture_target(x)}});
                json doc{{"m", phi_m}, {"points", rows}};
                if (!phi_classical) {
                    doc["g2"] = g2;
                    doc["g3"] = g3;
                }
                os << doc.dump(1) << '\n';
            }
            out.write(os.str());
            return 0;
        };
    });

    // verify
    std::string suite;
    bool all = false, verbose = false;
    auto* v_cmd = app.add_subcommand("verify", "Run the fixture suite and print a pass/fail matrix");
    auto* v_suite = v_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(verify::suite_names()));
    auto* v_all = v_cmd->add_flag("--all", all, "Every acceptance criterion");
    v_suite->excludes(v_all);
    v_cmd->add_flag("-v,--verbose", verbose, "List every failure and reported value");
    add_format(v_cmd, out, {"text", "json"});
    v_cmd->callback([&] {
        if (v_cmd->get_option("--format")->count() == 0) out.format = "text";
        action = [&] {
            if (!all && suite.empty()) throw UsageError("verify needs --suite NAME or --all");
            const auto results = verify::run_suite(all ? "all" : suite);
            out.write(verify_report(results, out.format, verbose));
            for (const auto& r : results)
                if (!r.passed) return exit_failed;
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const io::SchemaError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const lame::SpectralTableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return exit_failed;
    }
}

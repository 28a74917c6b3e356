// qnil: batch scenario runner for N-complexes and graded q-differential
// algebras.  Builds the requested structure, runs the selected verification
// checks, prints a human-readable table and optionally writes a JSON report.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid
// input, 3 resource cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "qnil/cochain.hpp"
#include "qnil/json_io.hpp"
#include "qnil/universal.hpp"

namespace {

using namespace qnil;

struct Options {
    std::string scenario;
    int n = 3;
    std::string q_mode = "cyclotomic"; // or a rational like "2", "3/2"
    int n_max = 4;
    std::string input_path;
    std::string preset; // matrix scenario: "cyclic" or "nilpotent"
    long seed = 0;
    std::vector<std::string> checks;
    std::string report_path;
    std::vector<std::string> omega; // envelope scenario override
    std::size_t cap = 4096;
};

struct Scenario {
    NComplex complex;                    // main (ZGraded unless noted)
    std::optional<QDGA> algebra;         // when a product structure exists
    std::optional<NComplex> mod_n;       // Z_N counterpart for hexagons
    std::optional<NComplex> homotopy_complex; // complex the homotopy acts on
    std::map<int, ExactMatrix> homotopy; // when a homotopy is available
    int homotopy_lo = 0;                 // first degree the identity holds at
    std::vector<StringSpec> strings;     // for the oracle check
    bool has_strings = false;
};

// deterministic generator for the random-strings scenario
struct SeedStream {
    std::uint64_t state;
    explicit SeedStream(std::uint64_t seed)
        : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long below(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

Scalar make_q(const Options& opt) {
    if (opt.q_mode == "cyclotomic") return q_generator(ScalarField::cyclotomic(opt.n));
    mpq_class v;
    try {
        v = mpq_class(opt.q_mode);
        v.canonicalize();
    } catch (const std::invalid_argument&) {
        throw invalid_input("--q must be \"cyclotomic\" or a rational like 2 or 3/2");
    }
    return q_generator(ScalarField::rationals(), v);
}

json q_to_json(const Options& opt) {
    if (opt.q_mode == "cyclotomic") return json{{"mode", "cyclotomic"}};
    mpq_class v(opt.q_mode);
    v.canonicalize();
    return json{{"mode", "rational"}, {"value", v.get_str()}};
}

AlgebraSpec algebra_from_input(const Options& opt) {
    if (opt.input_path.empty())
        throw invalid_input("scenario '" + opt.scenario + "' needs --input <algebra.json>");
    json j = load_json_file(opt.input_path);
    if (j.contains("algebra")) j = j["algebra"];
    return algebra_from_json(j);
}

Scenario build_scenario(const Options& opt, const Scalar& q) {
    Scenario s;
    const bool cyclotomic = q.field()->mode() == FieldMode::Cyclotomic;

    if (opt.scenario == "matrix") {
        std::vector<int> blocks;
        ExactMatrix e;
        if (!opt.input_path.empty()) {
            const MatrixExampleSpec spec = matrix_example_from_json(load_json_file(opt.input_path));
            if (spec.n != opt.n)
                throw invalid_input("matrix spec N disagrees with --N");
            blocks = spec.blocks;
            int total = 0;
            for (int b : blocks) total += b;
            e = ExactMatrix(q.field(), total, total);
            for (int i = 0; i < total; ++i)
                for (int j = 0; j < total; ++j)
                    e(i, j) = q.field()->from_rational(spec.e[i][j]);
        } else {
            blocks.assign(opt.n, 1);
            if (opt.preset == "nilpotent")
                e = nilpotent_shift_matrix(q.field(), opt.n);
            else if (opt.preset == "cyclic" || opt.preset.empty())
                e = cyclic_shift_matrix(q.field(), opt.n);
            else
                throw invalid_input("unknown matrix preset '" + opt.preset + "'");
        }
        if (cyclotomic) {
            const QDGA a = matrix_qdga(blocks, e, q);
            s.mod_n = a.complex();
            s.complex = pullback_grading(a, std::max(opt.n_max, 2 * opt.n)).complex();
            s.algebra = a;
        } else {
            // rational q: the q-Leibniz rule lives on the graded lift
            const QDGA a = matrix_qdga_graded(blocks, e, q, std::max(opt.n_max, 2));
            s.complex = a.complex();
            s.algebra = a;
        }
    } else if (opt.scenario == "simplicial") {
        if (opt.input_path.empty())
            throw invalid_input("scenario 'simplicial' needs --input <complex.json>");
        const auto spec = simplicial_from_json(load_json_file(opt.input_path));
        const QDGA a = simplicial_forms(spec, q, opt.n_max, opt.n, opt.cap);
        s.complex = a.complex();
        s.algebra = a;
    } else if (opt.scenario == "hochschild") {
        if (opt.input_path.empty())
            throw invalid_input("scenario 'hochschild' needs --input <algebra.json>");
        json j = load_json_file(opt.input_path);
        const AlgebraSpec a = algebra_from_json(j.contains("algebra") ? j["algebra"] : j);
        if (j.contains("bimodule")) {
            const BimoduleSpec m = bimodule_from_json(j["bimodule"], a);
            s.complex = hochschild_complex(a, m, q, opt.n_max, opt.n, opt.cap);
        } else {
            const QDGA alg = hochschild_qdga(a, q, opt.n_max, opt.n, opt.cap);
            s.complex = alg.complex();
            s.algebra = alg;
        }
    } else if (opt.scenario == "dual-product") {
        const AlgebraSpec a = algebra_from_input(opt);
        auto dp = dual_product_complex(a, q, opt.n_max, opt.n, opt.cap);
        s.complex = std::move(dp.complex);
        s.homotopy = std::move(dp.h);
        s.homotopy_lo = 1;
    } else if (opt.scenario == "tensor") {
        const AlgebraSpec a = algebra_from_input(opt);
        const QDGA t = tensor_qdga(a, q, opt.n_max, opt.cap);
        s.complex = t.complex();
        s.algebra = t;
    } else if (opt.scenario == "envelope") {
        const AlgebraSpec a = algebra_from_input(opt);
        std::vector<mpq_class> omega;
        if (opt.omega.empty()) {
            omega = default_omega(a);
        } else {
            for (const auto& w : opt.omega) {
                mpq_class v(w);
                v.canonicalize();
                omega.push_back(v);
            }
        }
        const QDGA t = tensor_qdga(a, q, opt.n_max, opt.cap);
        const auto env = universal_envelope(a, q, opt.n_max, opt.cap);
        const QDGA o = envelope_qdga(t, env);
        s.complex = o.complex();
        s.algebra = o;
        if (cyclotomic) {
            // the homotopy acts on F = negatives + envelope
            auto ext = extended_complex(a, q, omega, opt.n_max, true, opt.cap);
            s.homotopy = std::move(ext.h);
            s.homotopy_lo = ext.complex.lo();
            s.homotopy_complex = std::move(ext.complex);
        }
    } else if (opt.scenario == "strings" || opt.scenario == "random-strings") {
        std::vector<StringSpec> specs;
        std::uint64_t shuffle = 0;
        if (opt.scenario == "strings") {
            if (opt.input_path.empty())
                throw invalid_input("scenario 'strings' needs --input <strings.json>");
            specs = strings_from_json(load_json_file(opt.input_path));
            shuffle = static_cast<std::uint64_t>(opt.seed);
        } else {
            SeedStream rng(static_cast<std::uint64_t>(opt.seed) + 1);
            const int count = static_cast<int>(rng.below(1, 5));
            for (int i = 0; i < count; ++i)
                specs.push_back({static_cast<int>(rng.below(-2, 2)),
                                 static_cast<int>(rng.below(1, opt.n))});
            shuffle = rng.next() | 1;
        }
        for (const auto& sp : specs)
            if (sp.length < 1 || sp.length > opt.n)
                throw invalid_input("string lengths must lie in 1..N");
        const ScalarField* f = cyclotomic ? q.field() : ScalarField::rationals();
        s.complex = string_complex(specs, opt.n, Grading::ZGraded, f, shuffle);
        s.mod_n = string_complex(specs, opt.n, Grading::ZModN, f, shuffle);
        s.strings = specs;
        s.has_strings = true;
    } else {
        throw invalid_input("unknown scenario '" + opt.scenario + "'");
    }
    return s;
}

std::vector<std::string> default_checks(const Scenario& s) {
    std::vector<std::string> c{"nilpotency", "homology"};
    if (s.algebra) c.push_back("leibniz");
    if (!s.homotopy.empty()) c.push_back("homotopy");
    if (s.has_strings) {
        c.push_back("oracle");
        c.push_back("hexagon");
        c.push_back("long-sequences");
    }
    return c;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"qnil: exact checks for N-complexes and graded q-differential algebras"};
    app.require_subcommand(1);

    const std::vector<std::string> scenarios{"matrix",       "simplicial", "hochschild",
                                             "dual-product", "tensor",     "envelope",
                                             "strings",      "random-strings"};
    for (const auto& name : scenarios) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--N", opt.n, "nilpotency order N >= 2");
        sub->add_option("--q", opt.q_mode, "\"cyclotomic\" or a rational value");
        sub->add_option("--nmax", opt.n_max, "top degree of truncated complexes");
        sub->add_option("--input", opt.input_path, "input spec (JSON)");
        sub->add_option("--algebra", opt.input_path, "alias for --input (algebra scenarios)");
        sub->add_option("--preset", opt.preset, "matrix preset: cyclic | nilpotent");
        sub->add_option("--seed", opt.seed, "seed for generated instances");
        sub->add_option("--checks", opt.checks, "subset of nilpotency,leibniz,hexagon,long-sequences,homotopy,homology,oracle")
            ->delimiter(',');
        sub->add_option("--omega", opt.omega, "envelope scenario: omega coefficients")
            ->delimiter(',');
        sub->add_option("--report", opt.report_path, "write the JSON report here");
        sub->add_option("--cap", opt.cap, "per-degree dimension cap");
        sub->callback([&opt, name] { opt.scenario = name; });
    }

    CLI11_PARSE(app, argc, argv);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (opt.n < 2) throw invalid_input("--N must be >= 2");
        const Scalar q = make_q(opt);
        const bool cyclotomic = q.field()->mode() == FieldMode::Cyclotomic;

        Scenario s = build_scenario(opt, q);
        std::set<std::string> requested;
        const std::vector<std::string> wanted =
            opt.checks.empty() ? default_checks(s) : opt.checks;
        requested.insert(wanted.begin(), wanted.end());

        for (const auto& c : requested)
            if (c != "nilpotency" && c != "leibniz" && c != "hexagon" &&
                c != "long-sequences" && c != "homotopy" && c != "homology" && c != "oracle")
                throw invalid_input("unknown check '" + c + "'");
        if ((requested.count("hexagon") || requested.count("homotopy")) && !cyclotomic)
            throw invalid_input("hexagon and homotopy checks require cyclotomic mode");
        if (requested.count("leibniz") && !s.algebra)
            throw invalid_input("this scenario has no product structure for a leibniz check");
        if (requested.count("homotopy") && s.homotopy.empty())
            throw invalid_input("this scenario has no homotopy operator");
        if (requested.count("hexagon") && !s.mod_n)
            throw invalid_input("this scenario has no Z_N-graded form for hexagons");
        if (requested.count("oracle") && !s.has_strings)
            throw invalid_input("the oracle check applies to string scenarios only");

        json report;
        report["scenario"] = opt.scenario;
        report["N"] = opt.n;
        report["q"] = q_to_json(opt);
        report["nmax"] = opt.n_max;
        report["seed"] = opt.seed;

        json dims = json::object();
        for (int n = s.complex.lo(); n <= s.complex.hi(); ++n)
            dims[std::to_string(n)] = s.complex.dim(n);
        report["dimensions"] = dims;

        bool all_pass = true;
        json checks = json::object();
        std::cout << "scenario " << opt.scenario << "  N=" << opt.n << "  q=" << opt.q_mode
                  << "  nmax=" << opt.n_max << "  seed=" << opt.seed << "\n";
        std::cout << "dims:";
        for (int n = s.complex.lo(); n <= s.complex.hi(); ++n)
            std::cout << " [" << n << "]=" << s.complex.dim(n);
        std::cout << "\n";

        auto record = [&](const std::string& name, bool pass, json detail) {
            detail["pass"] = pass;
            checks[name] = detail;
            all_pass = all_pass && pass;
            std::cout << "check " << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
        };

        for (const auto& name : wanted) {
            if (name == "nilpotency") {
                json detail;
                auto run = [&](const NComplex& c, const char* which) {
                    const auto rep = verify_nilpotency(c);
                    json d{{"ok", rep.ok}};
                    if (!rep.ok) d["first_failing_degree"] = rep.first_failing_degree;
                    detail[which] = d;
                    return rep.ok;
                };
                bool ok = run(s.complex, "complex");
                if (s.mod_n) ok = run(*s.mod_n, "mod_n") && ok;
                record(name, ok, detail);
            } else if (name == "leibniz") {
                const auto rep = s.algebra->leibniz_check();
                json detail;
                if (!rep.ok)
                    detail["witness"] = json{{"a", rep.a}, {"b", rep.b}, {"i", rep.i},
                                             {"j", rep.j}};
                record(name, rep.ok, detail);
            } else if (name == "hexagon") {
                json nodes = json::array();
                bool ok = true;
                const int nn = s.mod_n->nilpotency_order();
                for (int l = 1; l < nn; ++l)
                    for (int m = 1; l + m <= nn; ++m) {
                        const auto rep = hexagon_check(*s.mod_n, l, m);
                        ok = ok && rep.ok;
                        json entry{{"l", l}, {"m", m}, {"exact", rep.ok}};
                        nodes.push_back(entry);
                    }
                record(name, ok, json{{"pairs", nodes}});
            } else if (name == "long-sequences") {
                bool ok = true;
                json entries = json::array();
                const int nn = s.complex.nilpotency_order();
                for (int l = 1; l < nn; ++l)
                    for (int m = 1; l + m <= nn; ++m)
                        for (int p = 0; p < nn; ++p) {
                            const auto rep = long_sequence_check(s.complex, l, m, p);
                            ok = ok && rep.ok;
                            entries.push_back(
                                json{{"l", l}, {"m", m}, {"p", p}, {"exact", rep.ok}});
                        }
                record(name, ok, json{{"sequences", entries}});
            } else if (name == "homotopy") {
                const NComplex& hc = s.homotopy_complex ? *s.homotopy_complex : s.complex;
                const auto rep = homotopy_vanishing_check(hc, s.homotopy, q, s.homotopy_lo);
                const bool ok = rep.identity_all() && rep.sum_all() &&
                                (!rep.homology_checked || rep.homology_vanishes());
                json detail{{"identity", rep.identity_all()},
                            {"sum_identity", rep.sum_all()},
                            {"homology_vanishes",
                             rep.homology_checked ? json(rep.homology_vanishes()) : json()}};
                record(name, ok, detail);
            } else if (name == "homology") {
                json table = json::array();
                const NComplex& c = s.mod_n && !s.has_strings ? *s.mod_n : s.complex;
                bool ok = true;
                try {
                    for (int k = 1; k < c.nilpotency_order(); ++k) {
                        const int lo = c.grading() == Grading::ZModN ? 0 : c.lo();
                        const int hi =
                            c.grading() == Grading::ZModN ? c.nilpotency_order() - 1 : c.hi();
                        for (int n = lo; n <= hi; ++n) {
                            if (!c.is_determinate(k, n)) continue;
                            table.push_back(homology_to_json(homology(c, k, n)));
                        }
                    }
                } catch (const inclusion_violation& e) {
                    ok = false;
                    checks["homology_error"] = e.what();
                }
                record(name, ok, json{{"table", table}});
                for (const auto& row : table)
                    std::cout << "  H^(" << row["k"].get<int>() << ","
                              << row["n"].get<int>() << ") dim=" << row["dim"].get<int>()
                              << "  ker=" << row["kernel_dim"].get<int>()
                              << " im=" << row["image_dim"].get<int>() << "\n";
                report["homology"] = table;
            } else if (name == "oracle") {
                bool ok = true;
                json mismatches = json::array();
                const NComplex& c = s.complex;
                for (int k = 1; k < c.nilpotency_order(); ++k)
                    for (int n = c.lo(); n + k <= c.hi(); ++n) {
                        const int got = homology(c, k, n).dim;
                        const int want =
                            string_homology_dim(s.strings, opt.n, Grading::ZGraded, k, n);
                        if (got != want) {
                            ok = false;
                            mismatches.push_back(json{{"k", k}, {"n", n}, {"got", got},
                                                      {"want", want}});
                        }
                    }
                record(name, ok, json{{"mismatches", mismatches}});
            }
        }

        report["checks"] = checks;
        report["pass"] = all_pass;
        std::cout << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";

        if (!opt.report_path.empty()) {
            std::ofstream out(opt.report_path);
            if (!out) throw invalid_input("cannot write report to " + opt.report_path);
            out << report.dump(2) << "\n";
        }

        const auto t1 = std::chrono::steady_clock::now();
        std::cerr << "elapsed_ms="
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << "\n";
        return all_pass ? 0 : 1;
    } catch (const cap_exceeded& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
}

// wdcalc: command-line calculator for semisimplified Weil-Deligne modules.
//
// Exit codes: 0 success / verdict true, 1 verdict false or violations found,
// 2 usage, parse, or domain error.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "wd/concrete.hpp"
#include "wd/expr.hpp"
#include "wd/fuzz.hpp"
#include "wd/gl2.hpp"
#include "wd/jordan.hpp"
#include "wd/json_io.hpp"
#include "wd/spectrum.hpp"
#include "wd/zeta.hpp"

using namespace wd;

namespace {

std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

Json stdin_json() { return Json::parse(read_stdin()); }

ResidueCard card_from(const std::string& text) { return ResidueCard(Integer(text)); }

// Module input: an expression argument evaluated over --q, or, when the
// expression is omitted, the JSON module schema on stdin (which carries q).
SSModule input_module(const std::string& expr_text, const std::string& qstr) {
    if (expr_text.empty()) return module_from_json(stdin_json());
    return eval_expr(parse_expr(expr_text), card_from(qstr));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) out.push_back(piece);
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for Frobenius-semisimple Weil-Deligne modules"};
    app.require_subcommand(1);

    std::string expr, qstr = "2", weight = "0";
    std::string v1, v2, perm = "()", factors, degrees;
    std::string kind, lambda_weight = "0", psi, psi1, psi2;
    std::string lo = "-1/2", hi = "1/2", bound = "1/5";
    std::uint64_t seed = 1;
    long iters = 1000, cap = 12, steps = 2, ell = 2, em = 2, ishift = 0, r = 2;
    bool json = false, mutate = false, scan = false;
    std::function<int()> run;

    auto add_module_input = [&](CLI::App* cmd) {
        cmd->add_option("expr", expr, "module expression; omit to read a JSON module from stdin");
        cmd->add_option("--q", qstr, "residue cardinality for expression leaves");
    };
    auto add_json_flag = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json, "emit JSON instead of text");
    };

    // ---- eval ----
    auto* c_eval = app.add_subcommand("eval", "evaluate a module expression to canonical form");
    add_module_input(c_eval);
    add_json_flag(c_eval);
    c_eval->callback([&] {
        run = [&]() -> int {
            SSModule a = input_module(expr, qstr);
            if (json)
                emit(module_to_json(a));
            else
                std::cout << a.to_string() << "\n";
            return 0;
        };
    });

    // ---- purity ----
    auto* c_purity = app.add_subcommand("purity", "test purity of a given weight");
    add_module_input(c_purity);
    c_purity->add_option("--weight", weight, "purity weight j (rational)")->required();
    add_json_flag(c_purity);
    c_purity->callback([&] {
        run = [&]() -> int {
            SSModule a = input_module(expr, qstr);
            Rational j = rational_from_string(weight);
            bool pure = is_pure(a, j);
            bool counting = purity_via_counting(a, j);
            if (json) {
                Json out{{"format", 1},
                         {"weight", rational_to_string(j)},
                         {"pure", pure},
                         {"counting", counting}};
                if (pure) {
                    Json levels = Json::array();
                    for (const auto& [w, mult] : weight_filtration(a, j))
                        levels.push_back({{"weight", rational_to_string(w)}, {"mult", mult}});
                    out["filtration"] = levels;
                }
                emit(out);
            } else {
                std::cout << "pure of weight " << rational_to_string(j) << ": "
                          << (pure ? "yes" : "no") << "\n";
                std::cout << "counting criterion: " << (counting ? "yes" : "no") << "\n";
                if (pure)
                    for (const auto& [w, mult] : weight_filtration(a, j))
                        std::cout << "gr weight " << rational_to_string(w) << ": dimension "
                                  << mult << "\n";
            }
            return pure ? 0 : 1;
        };
    });

    // ---- filtration ----
    auto* c_filt = app.add_subcommand(
        "filtration", "sample a random stable filtration of a realization and print its pieces");
    add_module_input(c_filt);
    c_filt->add_option("--seed", seed, "random seed");
    c_filt->add_option("--steps", steps, "maximum number of proper steps");
    add_json_flag(c_filt);
    c_filt->callback([&] {
        run = [&]() -> int {
            SSModule a = input_module(expr, qstr);
            GradedModule g = realize(a);
            Rng rng(seed);
            StableFiltration f = sample_filtration(g, rng, steps);
            std::vector<GradedModule> pieces = graded_pieces(g, f);
            if (json) {
                Json parts = Json::array();
                for (const GradedModule& p : pieces) parts.push_back(module_to_json(to_ss(p)));
                emit(Json{{"format", 1},
                          {"module", module_to_json(a)},
                          {"filtration", filtration_to_json(f)},
                          {"pieces", parts}});
            } else {
                std::cout << "module: " << a.to_string() << "\n";
                std::cout << "proper steps: " << f.steps.size() << "\n";
                for (std::size_t i = 0; i < pieces.size(); ++i)
                    std::cout << "gr_" << i << ": " << to_ss(pieces[i]).to_string() << "\n";
            }
            return 0;
        };
    });

    // ---- spectrum ----
    auto* c_spec = app.add_subcommand("spectrum", "eigenvalue multiplicity data of a module");
    add_module_input(c_spec);
    add_json_flag(c_spec);
    c_spec->callback([&] {
        run = [&]() -> int {
            WeightedSpectrum s = spectrum_of(input_module(expr, qstr));
            if (json) {
                emit(spectrum_to_json(s));
            } else {
                for (const auto& [alpha, mult] : s.support())
                    std::cout << alpha.to_string() << "  x" << mult << "\n";
            }
            return 0;
        };
    });

    // ---- canonical ----
    auto* c_canon = app.add_subcommand(
        "canonical", "canonical module attached to a spectrum satisfying the purity conditions");
    add_module_input(c_canon);
    c_canon->add_option("--weight", weight, "purity weight j (rational)")->required();
    add_json_flag(c_canon);
    c_canon->callback([&] {
        run = [&]() -> int {
            Rational j = rational_from_string(weight);
            WeightedSpectrum s = [&] {
                if (!expr.empty()) return spectrum_of(eval_expr(parse_expr(expr), card_from(qstr)));
                Json in = stdin_json();
                if (in.contains("entries")) return spectrum_from_json(in);
                return spectrum_of(module_from_json(in));
            }();
            SSModule out = canonical_module(s, j);
            if (json)
                emit(module_to_json(out));
            else
                std::cout << out.to_string() << "\n";
            return 0;
        };
    });

    // ---- lfactor (also: zeta lfactor) ----
    auto lfactor_action = [&]() -> int {
        SSModule a = input_module(expr, qstr);
        LocalLFactor l = local_l_factor(a);
        if (json) {
            emit(lfactor_to_json(l));
        } else {
            std::cout << l.to_string() << "\n";
            std::cout << "degree: " << l.degree() << "\n";
        }
        return 0;
    };
    auto* c_lf = app.add_subcommand("lfactor", "local L-factor det(1 - T Phi | ker N)^{-1}");
    add_module_input(c_lf);
    add_json_flag(c_lf);
    c_lf->callback([&] { run = lfactor_action; });

    // ---- gl2 ----
    auto* c_gl2 = app.add_subcommand("gl2", "rank-two parameter bookkeeping");
    c_gl2->require_subcommand(1);

    auto* c_cls = c_gl2->add_subcommand("classify",
                                        "unitary classification of a rank-two parameter");
    c_cls->add_option("--kind", kind,
                      "supercuspidal | steinberg | principal; omit to read JSON from stdin");
    c_cls->add_option("--q", qstr, "residue cardinality");
    c_cls->add_option("--lambda-weight", lambda_weight, "weight of the supercuspidal datum");
    c_cls->add_option("--psi", psi, "twisting monomial, e.g. \"zeta:0 q^1/2\"");
    c_cls->add_option("--psi1", psi1, "first principal-series monomial");
    c_cls->add_option("--psi2", psi2, "second principal-series monomial");
    add_json_flag(c_cls);
    c_cls->callback([&] {
        run = [&]() -> int {
            GL2Param p = [&] {
                if (kind.empty()) return gl2_from_json(stdin_json());
                ResidueCard q = card_from(qstr);
                if (kind == "supercuspidal")
                    return GL2Param::supercuspidal(q, rational_from_string(lambda_weight));
                if (kind == "steinberg" || kind == "steinberg_twist")
                    return GL2Param::steinberg(q, WeilMonomial::from_string(psi));
                if (kind == "principal" || kind == "principal_series")
                    return GL2Param::principal_series(q, WeilMonomial::from_string(psi1),
                                                      WeilMonomial::from_string(psi2));
                throw Error("unknown kind: " + kind);
            }();
            UnitarityData u = classify_unitary(p);
            bool ram = is_ramanujan(p);
            if (json) {
                emit(Json{{"format", 1},
                          {"t", rational_to_string(u.t)},
                          {"psi_weight", rational_to_string(u.psi_weight)},
                          {"tempered", u.t == 0},
                          {"ramanujan", ram},
                          {"central_character_weight",
                           rational_to_string(central_character_weight(p))},
                          {"module", module_to_json(parameter_module(p))}});
            } else {
                std::cout << "complementary-series parameter t: " << rational_to_string(u.t)
                          << "\n";
                std::cout << "tempered: " << (u.t == 0 ? "yes" : "no") << "\n";
                std::cout << "ramanujan: " << (ram ? "yes" : "no") << "\n";
                std::cout << "module: " << parameter_module(p).to_string() << "\n";
            }
            return 0;
        };
    });

    auto* c_ram = c_gl2->add_subcommand(
        "ramanujan-deduce", "integers k with |k - 2|/4 below the bound; verdict on (l, m)");
    c_ram->add_option("--l", ell, "first tensor weight");
    c_ram->add_option("--m", em, "second tensor weight");
    c_ram->add_option("--bound", bound, "exponent bound (rational)");
    add_json_flag(c_ram);
    c_ram->callback([&] {
        run = [&]() -> int {
            RamanujanDeduction d = ramanujan_deduce(ell, em, rational_from_string(bound));
            if (json) {
                emit(Json{{"format", 1},
                          {"ok", d.ok},
                          {"admissible", d.admissible},
                          {"l", ell},
                          {"m", em}});
            } else {
                std::cout << "admissible:";
                for (long k : d.admissible) std::cout << " " << k;
                std::cout << "\n";
                std::cout << "l = " << ell << ", m = " << em << ": "
                          << (d.ok ? "admissible" : "excluded") << "\n";
            }
            return d.ok ? 0 : 1;
        };
    });

    auto* c_p5 = c_gl2->add_subcommand(
        "prop5", "deduce the twisted weight from an open unit-length interval");
    c_p5->add_option("--i", ishift, "integer shift")->required();
    c_p5->add_option("--lo", lo, "interval lower endpoint (rational)");
    c_p5->add_option("--hi", hi, "interval upper endpoint (rational)");
    add_json_flag(c_p5);
    c_p5->callback([&] {
        run = [&]() -> int {
            Prop5Result p =
                prop5_weight_deduce(ishift, rational_from_string(lo), rational_from_string(hi));
            if (json) {
                emit(Json{{"format", 1},
                          {"twisted_weight", p.twisted_weight},
                          {"lambda_weight", rational_to_string(p.lambda_weight)}});
            } else {
                std::cout << "twisted weight: " << p.twisted_weight << "\n";
                std::cout << "datum weight: " << rational_to_string(p.lambda_weight) << "\n";
            }
            return 0;
        };
    });

    // ---- zeta ----
    auto* c_zeta = app.add_subcommand("zeta", "tensor-induced modules and their checks");
    c_zeta->require_subcommand(1);

    auto* c_br = c_zeta->add_subcommand(
        "build-r", "restrict 2-dimensional factors by residue degrees, then tensor");
    c_br->add_option("--factors", factors,
                     "semicolon-separated factor expressions; omit to read JSON from stdin");
    c_br->add_option("--q", qstr, "residue cardinality for factor expressions");
    c_br->add_option("--f", degrees, "comma-separated residue degrees (default all 1)");
    add_json_flag(c_br);
    c_br->callback([&] {
        run = [&]() -> int {
            ConjugateFamily fam;
            if (factors.empty()) {
                Json in = stdin_json();
                check_format(in);
                for (const Json& f : in.at("factors")) fam.factors.push_back(module_from_json(f));
                for (const Json& d : in.at("residue_degrees"))
                    fam.residue_degrees.push_back(d.get<long>());
            } else {
                ResidueCard q = card_from(qstr);
                for (const std::string& piece : split(factors, ';'))
                    fam.factors.push_back(eval_expr(parse_expr(piece), q));
                if (degrees.empty())
                    fam.residue_degrees.assign(fam.factors.size(), 1);
                else
                    for (const std::string& piece : split(degrees, ','))
                        fam.residue_degrees.push_back(std::stol(piece));
            }
            SSModule out = build_R(fam);
            if (json)
                emit(module_to_json(out));
            else
                std::cout << out.to_string() << "\n";
            return 0;
        };
    });

    auto* c_l42 = c_zeta->add_subcommand(
        "lemma42", "purity implication for a pair of 2-dimensional modules");
    c_l42->add_option("--v1", v1, "first factor expression");
    c_l42->add_option("--v2", v2, "second factor expression");
    c_l42->add_option("--q", qstr, "residue cardinality");
    c_l42->add_flag("--scan", scan, "exhaustive grid scan instead of a single pair");
    add_json_flag(c_l42);
    c_l42->callback([&] {
        run = [&]() -> int {
            ResidueCard q = card_from(qstr);
            if (scan) {
                Lemma42Scan s = lemma42_scan(q);
                if (json) {
                    emit(Json{{"format", 1},
                              {"pairs", s.pairs},
                              {"hypothesis_instances", s.hypothesis_instances},
                              {"violations", s.violations}});
                } else {
                    std::cout << "pairs checked: " << s.pairs << "\n";
                    std::cout << "hypothesis instances: " << s.hypothesis_instances << "\n";
                    std::cout << "violations: " << s.violations << "\n";
                }
                return s.violations == 0 ? 0 : 1;
            }
            if (v1.empty() || v2.empty()) throw Error("--v1 and --v2 are required without --scan");
            Lemma42Result res = lemma42_check(eval_expr(parse_expr(v1), q),
                                              eval_expr(parse_expr(v2), q));
            bool implication = !res.hypotheses_hold || res.conclusion_holds;
            if (json) {
                emit(Json{{"format", 1},
                          {"hypotheses_hold", res.hypotheses_hold},
                          {"conclusion_holds", res.conclusion_holds},
                          {"implication_holds", implication}});
            } else {
                std::cout << "hypotheses hold: " << (res.hypotheses_hold ? "yes" : "no") << "\n";
                std::cout << "conclusion holds: " << (res.conclusion_holds ? "yes" : "no") << "\n";
                std::cout << "implication holds: " << (implication ? "yes" : "no") << "\n";
            }
            return implication ? 0 : 1;
        };
    });

    auto* c_rb = c_zeta->add_subcommand("rb", "basis-permutation matrix acting on a tensor power");
    c_rb->add_option("--perm", perm, "permutation in cycle notation, e.g. \"(1 2)\"");
    c_rb->add_option("--r", r, "number of tensor factors");
    add_json_flag(c_rb);
    c_rb->callback([&] {
        run = [&]() -> int {
            RatMat m = rb_galois(perm_from_cycles(perm, r));
            if (json)
                emit(Json{{"format", 1}, {"matrix", matrix_to_json(m)}});
            else
                std::cout << m.to_string() << "\n";
            return 0;
        };
    });

    auto* c_zlf = c_zeta->add_subcommand("lfactor", "local L-factor of a module");
    add_module_input(c_zlf);
    add_json_flag(c_zlf);
    c_zlf->callback([&] { run = lfactor_action; });

    // ---- fuzz ----
    auto* c_fuzz = app.add_subcommand("fuzz", "randomized self-checks");
    c_fuzz->require_subcommand(1);

    auto* c_p3 = c_fuzz->add_subcommand(
        "prop3", "stable-filtration purity harness over random graded modules");
    c_p3->add_option("--seed", seed, "random seed");
    c_p3->add_option("--iters", iters, "iteration count");
    c_p3->add_option("--cap", cap, "dimension cap");
    c_p3->add_option("--q", qstr, "residue cardinality");
    c_p3->add_flag("--mutate", mutate, "deliberately break the purity predicate (sensitivity test)");
    add_json_flag(c_p3);
    c_p3->callback([&] {
        run = [&]() -> int {
            RunConfig cfg;
            cfg.seed = seed;
            cfg.iterations = iters;
            cfg.cap = cap;
            cfg.json_output = json;
            cfg.validate();
            Prop3Outcome out = run_prop3(cfg, card_from(qstr), mutate);
            bool bad = out.violations > 0 || out.kernel_failures > 0;
            if (json) {
                emit(Json{{"format", 1},
                          {"command", "fuzz prop3"},
                          {"seed", seed},
                          {"iterations", out.iterations},
                          {"cap", cap},
                          {"mutate", mutate},
                          {"pure_graded_instances", out.pure_graded_instances},
                          {"violations", out.violations},
                          {"kernel_failures", out.kernel_failures},
                          {"counterexamples", out.counterexamples}});
            } else {
                std::cout << "iterations: " << out.iterations << "\n";
                std::cout << "pure graded instances: " << out.pure_graded_instances << "\n";
                std::cout << "violations: " << out.violations << "\n";
                std::cout << "kernel failures: " << out.kernel_failures << "\n";
                for (const Json& c : out.counterexamples)
                    std::cout << "counterexample: " << c.dump() << "\n";
            }
            return bad ? 1 : 0;
        };
    });

    auto* c_to = c_fuzz->add_subcommand(
        "tensor-oracle", "symbolic tensor against the matrix-level realization route");
    c_to->add_option("--seed", seed, "random seed");
    c_to->add_option("--iters", iters, "iteration count");
    c_to->add_option("--q", qstr, "residue cardinality");
    add_json_flag(c_to);
    c_to->callback([&] {
        run = [&]() -> int {
            RunConfig cfg;
            cfg.seed = seed;
            cfg.iterations = iters;
            cfg.json_output = json;
            cfg.validate();
            TensorOracleOutcome out = run_tensor_oracle(cfg, card_from(qstr));
            if (json) {
                emit(Json{{"format", 1},
                          {"command", "fuzz tensor-oracle"},
                          {"seed", seed},
                          {"iterations", out.iterations},
                          {"mismatches", out.mismatches},
                          {"failures", out.failures}});
            } else {
                std::cout << "iterations: " << out.iterations << "\n";
                std::cout << "mismatches: " << out.mismatches << "\n";
                for (const Json& f : out.failures)
                    std::cout << "failure: " << f.dump() << "\n";
            }
            return out.mismatches > 0 ? 1 : 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run ? run() : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include "wd/fuzz.hpp"

#include <algorithm>
#include <optional>

namespace wd {

namespace {

const std::vector<Rational>& angle_grid() {
    static const std::vector<Rational> grid = {
        Rational(0),          make_rational(1, 2), make_rational(1, 3),
        make_rational(2, 3),  make_rational(1, 4), make_rational(3, 4)};
    return grid;
}

Rational random_quarter_exponent(Rng& rng) { return make_rational(rng.range(-8, 8), 4); }

} // namespace

WeilMonomial random_monomial(Rng& rng) {
    return WeilMonomial(random_quarter_exponent(rng), rng.pick(angle_grid()));
}

Rational random_half_integer_weight(Rng& rng) { return make_rational(rng.range(-8, 8), 2); }

SSModule random_module(Rng& rng, const ResidueCard& q, long dim_cap) {
    std::vector<SSModule::Part> parts;
    long remaining = dim_cap;
    long nparts = 1 + rng.below(3);
    for (long i = 0; i < nparts && remaining > 0; ++i) {
        long t = std::min(rng.below(3), remaining - 1);
        long mult = std::min(1 + rng.below(2), remaining / (t + 1));
        if (mult < 1) break;
        parts.push_back({{random_monomial(rng), t}, mult});
        remaining -= mult * (t + 1);
    }
    if (parts.empty()) parts.push_back({{random_monomial(rng), 0}, 1});
    return SSModule(q, std::move(parts));
}

SSModule random_pure_module(Rng& rng, const ResidueCard& q, const Rational& j, long dim_cap) {
    std::vector<SSModule::Part> parts;
    long remaining = dim_cap;
    long nparts = 1 + rng.below(3);
    for (long i = 0; i < nparts && remaining > 0; ++i) {
        long t = std::min(rng.below(3), remaining - 1);
        long mult = std::min(1 + rng.below(2), remaining / (t + 1));
        if (mult < 1) break;
        WeilMonomial alpha((j + t) / 2, rng.pick(angle_grid()));
        parts.push_back({{alpha, t}, mult});
        remaining -= mult * (t + 1);
    }
    if (parts.empty()) parts.push_back({{WeilMonomial(j / 2, Rational(0)), 0}, 1});
    return SSModule(q, std::move(parts));
}

RatMat random_unimodular(Rng& rng, long n) {
    RatMat m = RatMat::identity(n);
    if (n < 2) return m;
    for (long k = 0; k < 2 * n; ++k) {
        long i = rng.below(n);
        long j = rng.below(n);
        if (i == j) continue;
        if (rng.one_in(4)) {
            for (long c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
        } else {
            Rational s = rng.range(-2, 2);
            if (s == 0) continue;
            for (long c = 0; c < n; ++c) m(i, c) += s * m(j, c);
        }
    }
    return m;
}

GradedModule random_graded_module(Rng& rng, const ResidueCard& q, long dim_cap) {
    // Distinct angles keep the chains in distinct eigenvalue classes.
    std::vector<Rational> angles = angle_grid();
    for (std::size_t i = angles.size(); i > 1; --i)
        std::swap(angles[i - 1], angles[static_cast<std::size_t>(rng.below(static_cast<long>(i)))]);

    std::map<WeilMonomial, long> dims;
    std::map<WeilMonomial, RatMat> maps;
    long remaining = dim_cap;
    long nchains = 1 + rng.below(3);
    for (long c = 0; c < nchains && remaining > 0; ++c) {
        Rational base_e = random_quarter_exponent(rng);
        Rational angle = angles[static_cast<std::size_t>(c)];
        long len = 1 + rng.below(3);
        std::vector<WeilMonomial> chain;
        std::vector<long> d;
        for (long i = 0; i < len && remaining > 0; ++i) {
            long di = std::min(1 + rng.below(2), remaining);
            chain.emplace_back(base_e - i, angle);
            d.push_back(di);
            remaining -= di;
        }
        for (std::size_t i = 0; i < chain.size(); ++i) dims[chain[i]] = d[i];
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            RatMat n(d[i + 1], d[i]);
            for (long r = 0; r < n.rows(); ++r)
                for (long col = 0; col < n.cols(); ++col) n(r, col) = rng.range(-2, 2);
            maps.emplace(chain[i], std::move(n));
        }
    }
    if (dims.empty()) dims.emplace(random_monomial(rng), 1);
    return GradedModule(q, std::move(dims), std::move(maps));
}

GradedModule conjugated_realization(Rng& rng, const SSModule& a) {
    GradedModule g = realize(a);
    std::map<WeilMonomial, RatMat> change;
    for (const auto& [alpha, d] : g.dims()) change.emplace(alpha, random_unimodular(rng, d));
    std::map<WeilMonomial, RatMat> maps;
    for (const auto& [alpha, n] : g.maps()) {
        auto inv = inverse(change.at(alpha));
        if (!inv) throw Error("basis change not invertible");
        maps.emplace(alpha, change.at(GradedModule::down(alpha)) * n * *inv);
    }
    return GradedModule(g.q(), g.dims(), std::move(maps));
}

Expr random_expr(Rng& rng, long depth) {
    long choice = depth <= 0 ? 0 : rng.below(7);
    Expr e;
    switch (choice) {
    case 0:
        e.kind = Expr::Kind::ind;
        e.e = random_quarter_exponent(rng);
        e.zeta = rng.pick(angle_grid());
        e.t = rng.below(3);
        return e;
    case 1: {
        e.kind = Expr::Kind::sum;
        long n = rng.below(3);
        for (long i = 0; i < n; ++i) e.children.push_back(random_expr(rng, depth - 1));
        return e;
    }
    case 2:
        e.kind = Expr::Kind::tensor;
        e.children.push_back(random_expr(rng, depth - 1));
        e.children.push_back(random_expr(rng, depth - 1));
        return e;
    case 3:
        e.kind = Expr::Kind::dual;
        e.children.push_back(random_expr(rng, depth - 1));
        return e;
    case 4:
        e.kind = Expr::Kind::twist;
        e.arg = rng.range(-3, 3);
        e.children.push_back(random_expr(rng, depth - 1));
        return e;
    case 5:
        e.kind = Expr::Kind::restrict_scalars;
        e.arg = 1 + rng.below(3);
        e.children.push_back(random_expr(rng, depth - 1));
        return e;
    default:
        e.kind = Expr::Kind::ext2;
        e.children.push_back(random_expr(rng, depth - 1));
        return e;
    }
}

namespace {

// With `mutate` a module only counts as pure when it is also indecomposable;
// this misses decomposable pure totals and must trip the harness.
bool pure_probe(const SSModule& a, const Rational& j, bool mutate) {
    if (!is_pure(a, j)) return false;
    return !mutate || a.block_count() <= 1;
}

std::optional<Rational> probe_weight(const SSModule& a, bool mutate) {
    auto w = purity_weight(a);
    if (!w) return std::nullopt;
    if (mutate && a.block_count() > 1) return std::nullopt;
    return w;
}

struct Prop3Case {
    bool violation = false;
    bool kernel_failure = false;
    bool pure_graded = false;
    Rational common_weight;
};

Prop3Case evaluate_case(const GradedModule& g, const StableFiltration& f, bool mutate) {
    Prop3Case out;
    std::vector<GradedModule> pieces = graded_pieces(g, f);
    long kernel_sum = 0;
    for (const auto& p : pieces) kernel_sum += b_of(p);
    out.kernel_failure = kernel_sum < b_of(g);

    std::optional<Rational> common;
    bool have_common = true;
    for (const auto& p : pieces) {
        auto w = probe_weight(to_ss(p), mutate);
        if (!w || (common && !(*common == *w))) {
            have_common = false;
            break;
        }
        common = w;
    }
    if (have_common && common) {
        out.pure_graded = true;
        out.common_weight = *common;
        out.violation = !pure_probe(to_ss(g), *common, mutate);
    }
    return out;
}

Json describe_case(const GradedModule& g, const StableFiltration& f, const Prop3Case& c) {
    Json pieces = Json::array();
    for (const auto& p : graded_pieces(g, f)) pieces.push_back(module_to_json(to_ss(p)));
    return Json{{"module", graded_to_json(g)},
                {"filtration", filtration_to_json(f)},
                {"pieces", pieces},
                {"common_weight", rational_to_string(c.common_weight)},
                {"total", module_to_json(to_ss(g))}};
}

// Drop filtration steps one at a time while the violation persists.
StableFiltration shrink_case(const GradedModule& g, StableFiltration f, bool mutate) {
    bool progress = true;
    while (progress && !f.steps.empty()) {
        progress = false;
        for (std::size_t i = 0; i < f.steps.size(); ++i) {
            StableFiltration candidate;
            for (std::size_t k = 0; k < f.steps.size(); ++k)
                if (k != i) candidate.steps.push_back(f.steps[k]);
            if (evaluate_case(g, candidate, mutate).violation) {
                f = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return f;
}

GradedModule random_prop3_module(Rng& rng, const ResidueCard& q, long cap) {
    switch (rng.below(4)) {
    case 0:
        return conjugated_realization(
            rng, random_pure_module(rng, q, random_half_integer_weight(rng), cap));
    case 1: return conjugated_realization(rng, random_module(rng, q, cap));
    case 2: return random_graded_module(rng, q, cap);
    default: {
        // Small split pure module: the shape an indecomposability probe misses.
        Rational j = random_half_integer_weight(rng);
        std::vector<SSModule::Part> parts;
        long n = 2 + rng.below(2);
        for (long i = 0; i < n; ++i)
            parts.push_back({{WeilMonomial(j / 2, rng.pick(angle_grid())), 0}, 1});
        return conjugated_realization(rng, SSModule(q, std::move(parts)));
    }
    }
}

} // namespace

Prop3Outcome run_prop3(const RunConfig& cfg, const ResidueCard& q, bool mutate) {
    cfg.validate();
    Rng rng(cfg.seed);
    Prop3Outcome out;
    out.iterations = cfg.iterations;
    for (long iter = 0; iter < cfg.iterations; ++iter) {
        GradedModule g = random_prop3_module(rng, q, cfg.cap);
        StableFiltration f = sample_filtration(g, rng, 1 + rng.below(4));
        Prop3Case c = evaluate_case(g, f, mutate);
        if (c.pure_graded) ++out.pure_graded_instances;
        if (c.kernel_failure) {
            ++out.kernel_failures;
            if (out.counterexamples.size() < 5) {
                Json j = describe_case(g, f, c);
                j["kind"] = "kernel_inequality";
                out.counterexamples.push_back(std::move(j));
            }
        }
        if (c.violation) {
            ++out.violations;
            if (out.counterexamples.size() < 5) {
                StableFiltration small = shrink_case(g, f, mutate);
                Json j = describe_case(g, small, evaluate_case(g, small, mutate));
                j["kind"] = "purity_violation";
                out.counterexamples.push_back(std::move(j));
            }
        }
    }
    return out;
}

TensorOracleOutcome run_tensor_oracle(const RunConfig& cfg, const ResidueCard& q) {
    cfg.validate();
    Rng rng(cfg.seed);
    TensorOracleOutcome out;
    out.iterations = cfg.iterations;
    for (long iter = 0; iter < cfg.iterations; ++iter) {
        SSModule a = SSModule::block(q, random_monomial(rng), rng.below(5));
        SSModule b = SSModule::block(q, random_monomial(rng), rng.below(5));
        SSModule symbolic = tensor(a, b);
        SSModule concrete = to_ss(tensor_concrete(realize(a), realize(b)));
        if (!(symbolic == concrete)) {
            ++out.mismatches;
            if (out.failures.size() < 5)
                out.failures.push_back(Json{{"left", module_to_json(a)},
                                            {"right", module_to_json(b)},
                                            {"symbolic", module_to_json(symbolic)},
                                            {"concrete", module_to_json(concrete)}});
        }
    }
    return out;
}

} // namespace wd

#include "wd/json_io.hpp"

namespace wd {

namespace {

Json integer_to_json(const Integer& q) {
    if (q.fits_slong_p()) return q.get_si();
    return q.get_str();
}

Integer integer_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw Error(std::string(what) + " must be an integer or decimal string");
}

Rational rational_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw Error(std::string("missing rational field '") + key + "'");
    return rational_from_string(j[key].get<std::string>());
}

long long_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(std::string("missing integer field '") + key + "'");
    return j[key].get<long>();
}

const Json& field(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(std::string("missing field '") + key + "'");
    return j[key];
}

ResidueCard q_field(const Json& j) { return ResidueCard(integer_from_json(field(j, "q"), "q")); }

} // namespace

void check_format(const Json& j) {
    if (j.contains("format") && (!j["format"].is_number_integer() || j["format"] != 1))
        throw Error("unsupported format version");
}

Json monomial_to_json(const WeilMonomial& a) {
    return Json{{"e", rational_to_string(a.e())}, {"zeta", rational_to_string(a.zeta())}};
}

WeilMonomial monomial_from_json(const Json& j) {
    return WeilMonomial(rational_field(j, "e"), rational_field(j, "zeta"));
}

Json module_to_json(const SSModule& a) {
    Json parts = Json::array();
    for (const auto& [blk, mult] : a.parts())
        parts.push_back(
            Json{{"alpha", monomial_to_json(blk.alpha)}, {"t", blk.t}, {"mult", mult}});
    return Json{{"format", 1}, {"q", integer_to_json(a.q().value())}, {"parts", parts}};
}

SSModule module_from_json(const Json& j) {
    check_format(j);
    if (!j.contains("parts") || !j["parts"].is_array()) throw Error("missing 'parts' array");
    std::vector<SSModule::Part> parts;
    for (const auto& p : j["parts"])
        parts.push_back(
            {{monomial_from_json(field(p, "alpha")), long_field(p, "t")}, long_field(p, "mult")});
    return SSModule(q_field(j), std::move(parts));
}

Json spectrum_to_json(const WeightedSpectrum& s) {
    Json entries = Json::array();
    for (const auto& [alpha, m] : s.support())
        entries.push_back(Json{{"alpha", monomial_to_json(alpha)}, {"mult", m}});
    return Json{{"format", 1}, {"q", integer_to_json(s.q().value())}, {"entries", entries}};
}

WeightedSpectrum spectrum_from_json(const Json& j) {
    check_format(j);
    if (!j.contains("entries") || !j["entries"].is_array()) throw Error("missing 'entries' array");
    std::map<WeilMonomial, long> mult;
    for (const auto& p : j["entries"])
        mult[monomial_from_json(field(p, "alpha"))] += long_field(p, "mult");
    return WeightedSpectrum(q_field(j), std::move(mult));
}

Json gl2_to_json(const GL2Param& p) {
    Json j{{"format", 1}, {"q", integer_to_json(p.q().value())}};
    switch (p.kind()) {
    case GL2Kind::supercuspidal:
        j["kind"] = "supercuspidal";
        j["lambda_weight"] = rational_to_string(p.lambda_weight());
        break;
    case GL2Kind::steinberg_twist:
        j["kind"] = "steinberg_twist";
        j["psi"] = monomial_to_json(p.psi());
        break;
    case GL2Kind::principal_series:
        j["kind"] = "principal_series";
        j["psi1"] = monomial_to_json(p.psi1());
        j["psi2"] = monomial_to_json(p.psi2());
        break;
    }
    return j;
}

GL2Param gl2_from_json(const Json& j) {
    check_format(j);
    if (!j.contains("kind") || !j["kind"].is_string()) throw Error("missing 'kind'");
    std::string kind = j["kind"].get<std::string>();
    ResidueCard q = q_field(j);
    if (kind == "supercuspidal") return GL2Param::supercuspidal(q, rational_field(j, "lambda_weight"));
    if (kind == "steinberg_twist") return GL2Param::steinberg(q, monomial_from_json(field(j, "psi")));
    if (kind == "principal_series")
        return GL2Param::principal_series(q, monomial_from_json(field(j, "psi1")),
                                          monomial_from_json(field(j, "psi2")));
    throw Error("unknown parameter kind '" + kind + "'");
}

Json matrix_to_json(const RatMat& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

Json graded_to_json(const GradedModule& g) {
    Json pieces = Json::array();
    for (const auto& [alpha, d] : g.dims())
        pieces.push_back(Json{{"alpha", monomial_to_json(alpha)}, {"dim", d}});
    Json maps = Json::array();
    for (const auto& [alpha, m] : g.maps())
        maps.push_back(Json{{"alpha", monomial_to_json(alpha)}, {"matrix", matrix_to_json(m)}});
    return Json{{"format", 1},
                {"q", integer_to_json(g.q().value())},
                {"pieces", pieces},
                {"maps", maps}};
}

Json filtration_to_json(const StableFiltration& f) {
    Json steps = Json::array();
    for (const auto& step : f.steps) {
        Json bases = Json::array();
        for (const auto& [alpha, basis] : step.bases())
            bases.push_back(Json{{"alpha", monomial_to_json(alpha)}, {"basis", matrix_to_json(basis)}});
        steps.push_back(bases);
    }
    return Json{{"format", 1}, {"steps", steps}};
}

Json lfactor_to_json(const LocalLFactor& l) {
    Json roots = Json::array();
    for (const auto& [root, mult] : l.inverse_roots)
        roots.push_back(Json{{"alpha", monomial_to_json(root)}, {"mult", mult}});
    return Json{{"format", 1},
                {"degree", l.degree()},
                {"inverse_roots", roots},
                {"factored", l.to_string()}};
}

} // namespace wd

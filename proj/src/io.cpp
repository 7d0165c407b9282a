#include "futaki/io.hpp"

#include <sstream>
#include <utility>

#include "futaki/errors.hpp"

namespace futaki {

namespace {

const nlohmann::json& require(const nlohmann::json& doc, const char* field,
                              const std::string& what) {
    if (!doc.is_object()) {
        throw invalid_input(what + ": expected a JSON object");
    }
    if (!doc.contains(field)) {
        throw invalid_input(what + ": missing required field '" + field + "'");
    }
    return doc.at(field);
}

long integer_from(const nlohmann::json& value, const std::string& field) {
    if (!value.is_number_integer()) {
        throw invalid_input(field + ": expected a JSON integer");
    }
    return value.get<long>();
}

std::string string_from(const nlohmann::json& value, const std::string& field) {
    if (!value.is_string()) {
        throw invalid_input(field + ": expected a JSON string");
    }
    return value.get<std::string>();
}

std::vector<long> integer_array_from(const nlohmann::json& value, const std::string& field) {
    if (!value.is_array()) {
        throw invalid_input(field + ": expected a JSON array of integers");
    }
    std::vector<long> out;
    out.reserve(value.size());
    for (const auto& entry : value) {
        out.push_back(integer_from(entry, field + " entry"));
    }
    return out;
}

AmbientSpec ambient_from_json(const nlohmann::json& doc, const std::string& what) {
    if (doc.is_object() && doc.contains("kind") &&
        string_from(doc.at("kind"), what + ".kind") != "ambient") {
        throw invalid_input(what + ": nested spec must have kind \"ambient\"");
    }
    const long d = integer_from(require(doc, "d", what), what + ".d");
    std::vector<long> weights =
        integer_array_from(require(doc, "weights", what), what + ".weights");
    long shift = 0;
    if (doc.contains("linearization_shift")) {
        shift = integer_from(doc.at("linearization_shift"), what + ".linearization_shift");
    }
    return AmbientSpec(static_cast<int>(d), std::move(weights), shift);
}

} // namespace

Rational rational_from_json(const nlohmann::json& value, const std::string& field) {
    if (value.is_string()) {
        try {
            return Rational::from_string(value.get<std::string>());
        } catch (const invalid_input& e) {
            throw invalid_input(field + ": " + e.what());
        }
    }
    if (value.is_number_integer()) {
        return Rational(value.get<long>());
    }
    throw invalid_input(field + ": expected a rational string \"p/q\" or a JSON integer");
}

VarietySpec variety_spec_from_json(const nlohmann::json& doc) {
    const std::string kind = string_from(require(doc, "kind", "variety spec"), "kind");
    if (kind == "ambient") {
        return VarietySpec(ambient_from_json(doc, "ambient spec"));
    }
    if (kind == "hypersurface") {
        AmbientSpec ambient = ambient_from_json(require(doc, "ambient", "hypersurface spec"),
                                                "hypersurface spec ambient");
        const long degree =
            integer_from(require(doc, "degree", "hypersurface spec"), "degree");
        const long defining_weight =
            integer_from(require(doc, "defining_weight", "hypersurface spec"), "defining_weight");
        return VarietySpec(
            HypersurfaceSpec(std::move(ambient), static_cast<int>(degree), defining_weight));
    }
    if (kind == "polytope") {
        const long n = integer_from(require(doc, "n", "polytope spec"), "n");
        const auto& vertex_doc = require(doc, "vertices", "polytope spec");
        if (!vertex_doc.is_array()) {
            throw invalid_input("polytope spec: vertices must be an array of lattice points");
        }
        std::vector<std::vector<long>> vertices;
        vertices.reserve(vertex_doc.size());
        for (const auto& v : vertex_doc) {
            vertices.push_back(integer_array_from(v, "polytope vertex"));
        }
        std::vector<long> weights =
            integer_array_from(require(doc, "weights", "polytope spec"), "weights");
        long shift = 0;
        if (doc.contains("linearization_shift")) {
            shift = integer_from(doc.at("linearization_shift"), "linearization_shift");
        }
        return VarietySpec(
            PolytopeSpec(static_cast<int>(n), std::move(vertices), std::move(weights), shift));
    }
    throw invalid_input("variety spec: unknown kind '" + kind +
                        "' (expected ambient, hypersurface, or polytope)");
}

ResolutionData resolution_data_from_json(const nlohmann::json& doc) {
    ResolutionData data;
    data.n = static_cast<int>(integer_from(require(doc, "n", "resolution data"), "n"));
    data.Ln = rational_from_json(require(doc, "Ln", "resolution data"), "Ln");
    data.FXL = rational_from_json(require(doc, "FXL", "resolution data"), "FXL");
    data.u_bar = rational_from_json(require(doc, "u_bar", "resolution data"), "u_bar");
    if (doc.contains("KX_Lnminus1")) {
        data.KX_Lnminus1 = rational_from_json(doc.at("KX_Lnminus1"), "KX_Lnminus1");
    }
    const auto& points = require(doc, "points", "resolution data");
    if (!points.is_array()) {
        throw invalid_input("resolution data: points must be an array");
    }
    for (const auto& p : points) {
        SingularPointData sp;
        sp.label = string_from(require(p, "label", "singular point"), "label");
        const std::string what = "point '" + sp.label + "'";
        sp.u_p = rational_from_json(require(p, "u_p", what), what + ".u_p");
        sp.b_p = rational_from_json(require(p, "b_p", what), what + ".b_p");
        sp.KM_Ep_nminus1 =
            rational_from_json(require(p, "KM_Ep_nminus1", what), what + ".KM_Ep_nminus1");
        sp.Ep_n = rational_from_json(require(p, "Ep_n", what), what + ".Ep_n");
        if (p.contains("delta_u_p")) {
            sp.delta_u_p = rational_from_json(p.at("delta_u_p"), what + ".delta_u_p");
        }
        data.points.push_back(std::move(sp));
    }
    data.validate();
    return data;
}

CubicRequest cubic_request_from_json(const nlohmann::json& doc) {
    const std::string model_id = string_from(require(doc, "model", "cubic request"), "model");
    CubicModel model = [&]() {
        if (model_id == "F_Delta") {
            if (doc.contains("beta")) {
                throw invalid_input("cubic request: beta applies only to the F_AB model");
            }
            return CubicModel::F_Delta();
        }
        if (model_id == "F_AB") {
            return CubicModel::F_AB(
                rational_from_json(require(doc, "beta", "F_AB request"), "beta"));
        }
        throw invalid_input("cubic request: unknown model '" + model_id +
                            "' (expected F_Delta or F_AB)");
    }();

    CubicRequest request{std::move(model), {}, {}};
    const auto& numbers = require(doc, "numbers", "cubic request");
    if (!numbers.is_object()) {
        throw invalid_input("cubic request: numbers must be an object keyed by point label");
    }
    for (auto it = numbers.begin(); it != numbers.end(); ++it) {
        const std::string what = "numbers['" + it.key() + "']";
        PointNumbers pn;
        pn.b = rational_from_json(require(it.value(), "b", what), what + ".b");
        pn.KM_E2 = rational_from_json(require(it.value(), "KM_E2", what), what + ".KM_E2");
        request.numbers.emplace(it.key(), std::move(pn));
    }
    if (doc.contains("params")) {
        request.params = integer_array_from(doc.at("params"), "params");
    }
    return request;
}

nlohmann::json rational_to_json(const Rational& value) {
    return nlohmann::json(value.to_string());
}

nlohmann::json polynomial_to_json(const Polynomial& poly) {
    return nlohmann::json(poly.to_strings());
}

nlohmann::json futaki_result_to_json(const FutakiResult& result, bool include_deeper) {
    nlohmann::json out;
    out["F0"] = result.F0.to_string();
    out["F1"] = result.F1.to_string();
    out["chi_poly"] = polynomial_to_json(result.chi_poly);
    out["weight_poly"] = polynomial_to_json(result.weight_poly);
    if (include_deeper) {
        auto terms = nlohmann::json::array();
        for (const auto& t : result.deeper_terms) {
            terms.push_back(t.to_string());
        }
        out["deeper_terms"] = std::move(terms);
    }
    return out;
}

nlohmann::json expansion_to_json(const AsymptoticExpansion& expansion,
                                 const Rational& corollary, int n) {
    nlohmann::json out;
    auto terms = nlohmann::json::array();
    for (const auto& term : expansion.terms()) {
        nlohmann::json t;
        t["order"] = "r^" + std::to_string(term.exponent);
        t["coefficient"] = term.coefficient.to_string();
        auto requires_list = nlohmann::json::array();
        if (term.exponent == -static_cast<long>(n)) {
            requires_list.push_back("KX_Lnminus1");
            requires_list.push_back("delta_u_p");
        }
        t["requires"] = std::move(requires_list);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    out["corollary_leading"] = corollary.to_string();
    out["truncation"] = "r^" + std::to_string(expansion.truncation_order());
    return out;
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json out;
    out["verdict"] = to_string(report.verdict);
    out["coefficient"] = report.coefficient.to_string();
    out["order"] = report.order;
    if (report.witness_alpha.has_value()) {
        out["witness_alpha"] = *report.witness_alpha;
    }
    return out;
}

std::string polynomial_to_text(const Polynomial& poly, const std::string& var) {
    if (poly.degree() < 0) {
        return "0";
    }
    std::string out;
    for (int e = poly.degree(); e >= 0; --e) {
        const Rational& c = poly.coefficient(e);
        if (c.is_zero()) {
            continue;
        }
        const Rational magnitude = abs(c);
        std::string piece;
        if (e == 0) {
            piece = magnitude.to_string();
        } else {
            const std::string power = (e == 1) ? var : var + "^" + std::to_string(e);
            piece = (magnitude == Rational(1)) ? power : magnitude.to_string() + "*" + power;
        }
        if (out.empty()) {
            out = (c.sign() < 0 ? "-" : "") + piece;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

std::string futaki_result_to_text(const FutakiResult& result, bool include_deeper) {
    std::ostringstream out;
    out << "F0 = " << result.F0.to_string() << "\n";
    out << "F1 = " << result.F1.to_string() << "\n";
    out << "chi(k) = " << polynomial_to_text(result.chi_poly, "k") << "\n";
    out << "weight(k) = " << polynomial_to_text(result.weight_poly, "k") << "\n";
    if (include_deeper) {
        for (std::size_t j = 0; j < result.deeper_terms.size(); ++j) {
            out << "k^-" << (j + 1) << " coefficient = " << result.deeper_terms[j].to_string()
                << "\n";
        }
    }
    return out.str();
}

std::string expansion_to_text(const AsymptoticExpansion& expansion,
                              const Rational& corollary, int n) {
    std::ostringstream out;
    for (const auto& term : expansion.terms()) {
        out << "r^" << term.exponent << " coefficient = " << term.coefficient.to_string();
        if (term.exponent == -static_cast<long>(n)) {
            out << "  (requires KX_Lnminus1, delta_u_p)";
        }
        out << "\n";
    }
    out << "corollary leading coefficient = " << corollary.to_string() << "\n";
    out << "truncated at order r^" << expansion.truncation_order() << "\n";
    return out.str();
}

std::string report_to_text(const Report& report) {
    std::ostringstream out;
    out << "verdict: " << to_string(report.verdict) << "\n";
    out << "coefficient: " << report.coefficient.to_string() << "\n";
    out << "order: " << report.order << "\n";
    if (report.witness_alpha.has_value()) {
        out << "witness_alpha: [";
        for (std::size_t i = 0; i < report.witness_alpha->size(); ++i) {
            if (i) {
                out << ", ";
            }
            out << (*report.witness_alpha)[i];
        }
        out << "]\n";
    }
    return out.str();
}

} // namespace futaki

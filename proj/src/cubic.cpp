#include "futaki/cubic.hpp"

#include <cstdlib>

#include "futaki/adiabatic.hpp"
#include "futaki/errors.hpp"

namespace futaki {

namespace {

/// u at a coordinate point is the action weight of the coordinate the
/// point sits on (the Fubini-Study-type potential evaluated there).
Rational u_at_point(const CubicSingularPoint& point, const std::vector<long>& weights) {
    for (std::size_t i = 0; i < point.coordinates.size(); ++i) {
        if (point.coordinates[i] != 0) {
            return Rational(weights[i]);
        }
    }
    throw invalid_input("cubic catalog: singular point '" + point.label +
                        "' has no coordinate entry");
}

const PointNumbers& numbers_for(const ResolutionNumbers& nums, const std::string& label) {
    auto it = nums.find(label);
    if (it == nums.end()) {
        throw incomplete_input("instability_report: missing resolution numbers for point '" +
                               label + "'");
    }
    return it->second;
}

/// Assembles the n = 3, L^3 = 3, u_bar = 0 resolution data the corollary
/// evaluates; E_p^3 and delta_u are not involved at order r^-2.
ResolutionData resolution_data(const CubicModel& model, const ResolutionNumbers& nums,
                               const std::map<std::string, Rational>& u_values) {
    ResolutionData data;
    data.n = 3;
    data.Ln = model.L3();
    data.FXL = Rational(0);
    data.u_bar = model.u_bar();
    for (const auto& point : model.singular_points()) {
        const PointNumbers& pn = numbers_for(nums, point.label);
        SingularPointData sp;
        sp.label = point.label;
        sp.u_p = u_values.at(point.label);
        sp.b_p = pn.b;
        sp.KM_Ep_nminus1 = pn.KM_E2;
        sp.Ep_n = Rational(0);
        data.points.push_back(std::move(sp));
    }
    return data;
}

Report report_for_action(const CubicModel& model, const ResolutionNumbers& nums,
                         const std::vector<long>& params) {
    const ActionData action = make_action(model, params);
    const ResolutionData data = resolution_data(model, nums, action.u_values);
    Report report;
    report.coefficient = corollary_leading(data);
    if (report.coefficient.is_zero()) {
        report.verdict = Verdict::INCONCLUSIVE_AT_THIS_ORDER;
    } else {
        report.verdict = Verdict::UNSTABLE;
        if (model.id() == "F_AB") {
            const long c = params[0];
            report.witness_alpha = std::vector<long>{-2 * c, -c, 0, c, 2 * c};
        } else {
            report.witness_alpha = params;
        }
    }
    return report;
}

Report search_F_Delta(const CubicModel& model, const ResolutionNumbers& nums) {
    // K_M . (b_j E_j)^2 per point, in catalog order p0, p1, p2.
    std::vector<Rational> v;
    for (const auto& point : model.singular_points()) {
        const PointNumbers& pn = numbers_for(nums, point.label);
        v.push_back(pn.b * pn.b * pn.KM_E2);
    }
    const bool all_equal = (v[0] == v[1] && v[1] == v[2]);

    // The coefficient is linear on the 2-dimensional trace-free lattice,
    // so |a_j| <= 2 sees a basis; keep the first strict maximizer of
    // |coefficient| as the witness.
    Report report;
    report.verdict =
        all_equal ? Verdict::INCONCLUSIVE_AT_THIS_ORDER : Verdict::UNSTABLE;
    report.coefficient = Rational(0);
    Rational best_abs(0);
    for (long a0 = -2; a0 <= 2; ++a0) {
        for (long a1 = -2; a1 <= 2; ++a1) {
            const long a2 = -a0 - a1;
            if (a2 < -2 || a2 > 2 || (a0 == 0 && a1 == 0)) {
                continue;
            }
            const Rational coef =
                Rational(-1, 2) * (Rational(a0) * v[0] + Rational(a1) * v[1] +
                                   Rational(a2) * v[2]);
            if (abs(coef) > best_abs) {
                best_abs = abs(coef);
                report.coefficient = coef;
                report.witness_alpha = std::vector<long>{a0, a1, a2};
            }
        }
    }
    if (report.verdict == Verdict::INCONCLUSIVE_AT_THIS_ORDER) {
        report.witness_alpha.reset();
        report.coefficient = Rational(0);
    }
    return report;
}

Report report_F_AB_default(const CubicModel& model, const ResolutionNumbers& nums) {
    // The verdict hinges on the two A5 points only; the A1 point (present
    // for beta = 0) never affects it.
    const PointNumbers& p0 = numbers_for(nums, "p0");
    const PointNumbers& p4 = numbers_for(nums, "p4");
    const Rational v0 = p0.b * p0.b * p0.KM_E2;
    const Rational v4 = p4.b * p4.b * p4.KM_E2;

    const ActionData action = make_action(model, {1});
    const ResolutionData data = resolution_data(model, nums, action.u_values);

    Report report;
    report.coefficient = corollary_leading(data); // = v0 - v4 for c = 1
    report.verdict = (v0 + v4).is_zero() ? Verdict::INCONCLUSIVE_AT_THIS_ORDER
                                         : Verdict::UNSTABLE;
    if (report.verdict == Verdict::UNSTABLE && !report.coefficient.is_zero()) {
        report.witness_alpha = std::vector<long>{-2, -1, 0, 1, 2};
    }
    return report;
}

} // namespace

const char* to_string(SingularityType type) {
    switch (type) {
        case SingularityType::D4: return "D4";
        case SingularityType::A5: return "A5";
        case SingularityType::A1: return "A1";
    }
    std::abort();
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::UNSTABLE: return "UNSTABLE";
        case Verdict::INCONCLUSIVE_AT_THIS_ORDER: return "INCONCLUSIVE-AT-THIS-ORDER";
    }
    std::abort();
}

CubicModel CubicModel::F_Delta() {
    CubicModel model;
    model.id_ = "F_Delta";
    model.points_ = {
        {"p0", {1, 0, 0, 0, 0}, SingularityType::D4},
        {"p1", {0, 1, 0, 0, 0}, SingularityType::D4},
        {"p2", {0, 0, 1, 0, 0}, SingularityType::D4},
    };
    return model;
}

CubicModel CubicModel::F_AB(const Rational& beta) {
    if (beta == Rational(1)) {
        throw invalid_input(
            "F_AB: beta = 1 has non-isolated singularities and is excluded from the catalog");
    }
    CubicModel model;
    model.id_ = "F_AB";
    model.beta_ = beta;
    model.points_.push_back({"p0", {1, 0, 0, 0, 0}, SingularityType::A5});
    if (beta.is_zero()) {
        model.points_.push_back({"p2", {0, 0, 1, 0, 0}, SingularityType::A1});
    }
    model.points_.push_back({"p4", {0, 0, 0, 0, 1}, SingularityType::A5});
    return model;
}

ActionData make_action(const CubicModel& model, const std::vector<long>& params) {
    std::vector<long> weights;
    if (model.id() == "F_Delta") {
        if (params.size() != 3) {
            throw invalid_input("make_action: F_Delta takes exactly three weight parameters");
        }
        if (params[0] + params[1] + params[2] != 0) {
            throw invalid_input("make_action: F_Delta weights must sum to zero");
        }
        if (params[0] == 0 && params[1] == 0 && params[2] == 0) {
            throw invalid_input("make_action: the trivial action is excluded");
        }
        weights = {params[0], params[1], params[2], 0, 0};
    } else {
        if (params.size() != 1) {
            throw invalid_input("make_action: F_AB takes exactly one covering multiplier");
        }
        const long c = params[0];
        if (c == 0) {
            throw invalid_input("make_action: the covering multiplier must be nonzero");
        }
        weights = {-2 * c, -c, 0, c, 2 * c};
    }

    ActionData action{HypersurfaceSpec(AmbientSpec(4, weights), 3, 0), {}};
    for (const auto& point : model.singular_points()) {
        action.u_values[point.label] = u_at_point(point, weights);
    }
    return action;
}

FutakiResult verify_polystable_futaki(const CubicModel& model, const std::vector<long>& params) {
    const ActionData action = make_action(model, params);
    FutakiResult result = futaki(VarietySpec(action.spec), 3);
    if (!result.F0.is_zero() || !result.F1.is_zero()) {
        throw error("verify_polystable_futaki: consistency failure — the " + model.id() +
                    " action yields (F0, F1) = (" + result.F0.to_string() + ", " +
                    result.F1.to_string() + ") instead of (0, 0)");
    }
    return result;
}

Report instability_report(const CubicModel& model, const ResolutionNumbers& nums,
                          const std::optional<std::vector<long>>& params) {
    // Completeness check up front so every path reports missing data.
    for (const auto& point : model.singular_points()) {
        numbers_for(nums, point.label);
    }
    if (params.has_value()) {
        return report_for_action(model, nums, *params);
    }
    if (model.id() == "F_Delta") {
        return search_F_Delta(model, nums);
    }
    return report_F_AB_default(model, nums);
}

} // namespace futaki

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "futaki/characters.hpp"
#include "futaki/futaki.hpp"
#include "futaki/rational.hpp"

namespace futaki {

/// ADE type of an isolated threefold singular point (catalog metadata
/// only; no local resolution geometry is computed).
enum class SingularityType { D4, A5, A1 };

const char* to_string(SingularityType type);

/// A singular point of a catalog cubic, sitting at a coordinate point of
/// P^4 (the coordinates array is the projective point).
struct CubicSingularPoint {
    std::string label;
    std::array<int, 5> coordinates;
    SingularityType type;
};

/// One of the two built-in K-polystable cubic threefolds X in P^4 carrying
/// a C*-action:
///
///   F_Delta:  x0 x1 x2 + x3^3 + x4^3 = 0, three D4 points at the first
///             three coordinate points; actions diag(t^a0, t^a1, t^a2, 1, 1)
///             with a0 + a1 + a2 = 0.
///   F_AB:     A x2^3 + x0 x3^2 + x1^2 x4 - x0 x2 x4 + B x1 x2 x3 = 0,
///             depending on beta = 4A/B^2: two A5 points (p0, p4), plus an
///             A1 point (p2) when beta = 0; actions are integer multiples
///             of diag(t^-2, t^-1, 1, t, t^2).  beta = 1 has non-isolated
///             singularities and is rejected.
///
/// Both have L^3 = 3 for L = O(1)|_X and average potential u_bar = 0.
class CubicModel {
public:
    static CubicModel F_Delta();
    static CubicModel F_AB(const Rational& beta);

    const std::string& id() const { return id_; }
    const std::optional<Rational>& beta() const { return beta_; }
    const std::vector<CubicSingularPoint>& singular_points() const { return points_; }
    Rational L3() const { return Rational(3); }
    Rational u_bar() const { return Rational(0); }

private:
    CubicModel() = default;

    std::string id_;
    std::optional<Rational> beta_;
    std::vector<CubicSingularPoint> points_;
};

/// Resolution input at one singular point: the exceptional coefficient
/// b > 0 and the intersection number K_M . E^2 of the chosen resolution.
struct PointNumbers {
    Rational b;
    Rational KM_E2;
};

/// Per-point resolution numbers, keyed by singular-point label.
using ResolutionNumbers = std::map<std::string, PointNumbers>;

/// A concrete C*-action on a catalog cubic: the equivariant hypersurface
/// spec (for the Futaki engine) and the potential values u(p) at the
/// singular points (for the adiabatic expansion).
struct ActionData {
    HypersurfaceSpec spec;
    std::map<std::string, Rational> u_values;
};

/// Builds the action from integer parameters: for F_Delta, params =
/// (a0, a1, a2) with sum 0 and not all 0, giving weights (a0, a1, a2, 0, 0)
/// and u(p_j) = a_j; for F_AB, params = (c) with c != 0, giving weights
/// c * (-2, -1, 0, 1, 2) and (u(p0), u(p2), u(p4)) = c * (-2, 0, 2).
/// Violations of the parameter constraints throw invalid_input.
ActionData make_action(const CubicModel& model, const std::vector<long>& params);

/// Runs the Futaki engine on the action's hypersurface spec (n = 3) and
/// asserts F0 = F1 = 0 exactly, as forced by K-polystability.  A nonzero
/// value would indicate a convention bug and throws futaki::error.
FutakiResult verify_polystable_futaki(const CubicModel& model, const std::vector<long>& params);

enum class Verdict { UNSTABLE, INCONCLUSIVE_AT_THIS_ORDER };

const char* to_string(Verdict verdict);

/// Outcome of the instability analysis at the leading correction order of
/// the adiabatic expansion (r^-2 for cubic threefolds): the coefficient of
/// r^-2 in F(M, L_r) for the reported action, a witness action when the
/// verdict is UNSTABLE, and the order the analysis was carried to.
struct Report {
    Verdict verdict;
    Rational coefficient;
    std::optional<std::vector<long>> witness_alpha;
    std::string order = "r^-2";
};

/// Decides K-instability of the resolution described by nums at order
/// r^-2.  With params given, evaluates the r^-2 coefficient
///   -(1/2) sum_p u(p) * KM_E2(p) * b(p)^2 / ... (via the adiabatic
/// corollary with n = 3, L^3 = 3, u_bar = 0) for that action and declares
/// UNSTABLE iff it is nonzero.  With params omitted:
///   F_Delta: searches trace-free integer actions with |a_j| <= 2 (linear
///            in a, so the bound suffices) and reports the largest
///            |coefficient| found; UNSTABLE iff the three values
///            K_M . (b_j E_j)^2 are not all equal.
///   F_AB:    UNSTABLE iff K_M.(b0 E0)^2 + K_M.(b4 E4)^2 != 0; the
///            reported coefficient is the c = 1 value, and the A1-point
///            entry (beta = 0) never affects the verdict.
/// Missing per-point entries in nums throw incomplete_input.
Report instability_report(const CubicModel& model, const ResolutionNumbers& nums,
                          const std::optional<std::vector<long>>& params = std::nullopt);

} // namespace futaki

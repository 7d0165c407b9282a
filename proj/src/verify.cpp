#include "futaki/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "futaki/adiabatic.hpp"
#include "futaki/cubic.hpp"
#include "futaki/errors.hpp"
#include "futaki/futaki.hpp"

namespace futaki {

namespace {

void check(bool condition, const std::string& message) {
    if (!condition) {
        throw error(message);
    }
}

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    try {
        return {name, true, body()};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

HypersurfaceSpec f_delta_spec(long a0, long a1, long a2) {
    return make_action(CubicModel::F_Delta(), {a0, a1, a2}).spec;
}

HypersurfaceSpec f_ab_spec(long c) {
    return make_action(CubicModel::F_AB(Rational(0)), {c}).spec;
}

PolytopeSpec unit_simplex(long a1, long a2) {
    return PolytopeSpec(2, {{0, 0}, {1, 0}, {0, 1}}, {a1, a2});
}

/// Section polytope of the adiabatic family on the blow-up of the plane:
/// the size-r simplex with a depth-b corner cut at the origin.
PolytopeSpec cut_simplex(long r, long b, long a1, long a2) {
    return PolytopeSpec(2, {{b, 0}, {r, 0}, {0, r}, {0, b}}, {a1, a2});
}

/// The shared spec list the invariance checks quantify over.
std::vector<VarietySpec> invariance_specs() {
    std::vector<VarietySpec> specs;
    specs.emplace_back(AmbientSpec(1, {1, -1}));
    specs.emplace_back(AmbientSpec(2, {2, 0, 1}));
    specs.emplace_back(AmbientSpec(3, {1, 2, -3, 0}));
    specs.emplace_back(f_delta_spec(1, 1, -2));
    specs.emplace_back(f_delta_spec(5, -2, -3));
    specs.emplace_back(f_ab_spec(1));
    specs.emplace_back(PolytopeSpec(1, {{0}, {1}}, {1}));
    specs.emplace_back(unit_simplex(1, 1));
    specs.emplace_back(cut_simplex(3, 1, 1, 0));
    return specs;
}

// --- 1. closed-form characters against independent enumeration ------------

std::string check_oracle_equivalence(std::uint64_t cap) {
    const std::vector<AmbientSpec> ambients = {
        AmbientSpec(1, {1, -1}),
        AmbientSpec(2, {2, 0, 1}, 1),
        AmbientSpec(3, {1, 2, -3, 0}),
        AmbientSpec(4, {3, 1, -1, 0, 2}, -2),
    };
    const std::vector<HypersurfaceSpec> hypers = {
        f_delta_spec(1, 1, -2),
        f_delta_spec(5, -2, -3),
        f_ab_spec(1),
    };
    for (long k = 0; k <= 30; ++k) {
        for (std::size_t i = 0; i < ambients.size(); ++i) {
            const CharacterSample closed = ambient_character(ambients[i], k);
            const CharacterSample brute = brute_force_character(ambients[i], k, cap);
            std::ostringstream msg;
            msg << "ambient spec " << i << " disagrees with enumeration at k=" << k;
            check(closed.chi == brute.chi && closed.weight == brute.weight, msg.str());
        }
        for (std::size_t i = 0; i < hypers.size(); ++i) {
            const CharacterSample closed = hypersurface_character(hypers[i], k);
            const CharacterSample brute = brute_force_character(hypers[i], k, cap);
            std::ostringstream msg;
            msg << "hypersurface spec " << i << " disagrees with enumeration at k=" << k;
            check(closed.chi == brute.chi && closed.weight == brute.weight, msg.str());
        }
    }
    return "4 ambient + 3 hypersurface specs, k = 0..30: closed forms equal enumeration exactly";
}

// --- 2. F1 blind to the linearization, F0 shifted by it -------------------

std::string check_linearization_invariance() {
    const std::vector<VarietySpec> specs = invariance_specs();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const int n = dimension(specs[i]);
        const FutakiResult base = futaki(with_shift(specs[i], 0), n);
        for (long lambda = -3; lambda <= 3; ++lambda) {
            const FutakiResult shifted = futaki(with_shift(specs[i], lambda), n);
            std::ostringstream msg;
            msg << "spec " << i << ", lambda=" << lambda;
            check(shifted.F1 == base.F1, msg.str() + ": F1 moved under relinearization");
            check(shifted.F0 == base.F0 + Rational(lambda),
                  msg.str() + ": F0 did not shift by lambda");
        }
    }
    return "9 specs x lambda in {-3..3}: F1 unchanged, F0 shifted by exactly lambda";
}

// --- 3. F1 blind to replacing the polarization by a power -----------------

std::string check_power_invariance() {
    const std::vector<VarietySpec> specs = invariance_specs();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const int n = dimension(specs[i]);
        const FutakiResult base = futaki(specs[i], n);
        for (long m : {2L, 3L, 5L}) {
            std::vector<CharacterSample> samples;
            for (long k = 1; k <= n + 4; ++k) {
                CharacterSample s = character(specs[i], m * k);
                s.k = k;
                samples.push_back(s);
            }
            const FutakiResult powered = futaki_from_samples(samples, n);
            std::ostringstream msg;
            msg << "spec " << i << ", m=" << m << ": F1(B^m) != F1(B)";
            check(powered.F1 == base.F1, msg.str());
        }
    }
    return "9 specs x m in {2,3,5}: F1 of the m-th power equals F1";
}

// --- 4. the catalog cubics have vanishing invariant -----------------------

std::string check_cubic_polystability() {
    std::mt19937 rng(0xF07A41);
    int found = 0;
    while (found < 10) {
        const long a0 = static_cast<long>(rng() % 13) - 6;
        const long a1 = static_cast<long>(rng() % 13) - 6;
        if (a0 == 0 && a1 == 0) {
            continue; // trivial action, not an admissible sample
        }
        const FutakiResult res =
            verify_polystable_futaki(CubicModel::F_Delta(), {a0, a1, -a0 - a1});
        check(res.F0.is_zero() && res.F1.is_zero(), "F_Delta action left a nonzero invariant");
        ++found;
    }
    for (long c = 1; c <= 3; ++c) {
        const FutakiResult res = verify_polystable_futaki(CubicModel::F_AB(Rational(0)), {c});
        check(res.F0.is_zero() && res.F1.is_zero(), "F_AB action left a nonzero invariant");
    }
    return "F_Delta x 10 random trace-free actions, F_{0,1} x c in {1,2,3}: (F0, F1) = (0, 0)";
}

// --- 5. pulling back the polarization preserves the invariant -------------

std::string check_pullback_equality() {
    const long alphas[3][2] = {{1, 0}, {1, 1}, {2, -1}};
    for (const auto& alpha : alphas) {
        const FutakiResult toric = futaki(VarietySpec(unit_simplex(alpha[0], alpha[1])), 2);
        const FutakiResult ambient =
            futaki(VarietySpec(AmbientSpec(2, {0, alpha[0], alpha[1]})), 2);
        std::ostringstream msg;
        msg << "alpha=(" << alpha[0] << "," << alpha[1] << ")";
        check(toric.F1 == ambient.F1, msg.str() + ": pulled-back F1 differs");
        check(toric.F0 == ambient.F0, msg.str() + ": pulled-back F0 differs");
    }
    return "3 weight vectors: blow-up section polytope reproduces the base invariant exactly";
}

// --- 6. F(M, L_r) approaches F(X, B) at rate 1/r ---------------------------

std::string check_continuity_decay() {
    const Rational f_limit = futaki(VarietySpec(unit_simplex(1, 0)), 2).F1;
    std::vector<Rational> scaled;
    for (long r : {8L, 16L, 32L}) {
        const Rational f_r = futaki(VarietySpec(cut_simplex(r, 1, 1, 0)), 2).F1;
        scaled.push_back(Rational(r) * abs(f_r - f_limit));
    }
    const Rational max_val = std::max({scaled[0], scaled[1], scaled[2]});
    check(Rational(2) * max_val <= Rational(3) * scaled[0],
          "r * |F1(r) - F1(limit)| not bounded within 3/2 of its r=8 value");
    std::ostringstream detail;
    detail << "r*|F1(r) - F1(limit)| at r=8,16,32: " << scaled[0].to_string() << ", "
           << scaled[1].to_string() << ", " << scaled[2].to_string()
           << "; max within 3/2 of the r=8 value";
    return detail.str();
}

// --- 7. the r^{1-n} coefficient matches the intersection formula ----------

std::string check_corollary_calibration() {
    struct Combo {
        long a1, a2, b;
    };
    const Combo combos[] = {{1, 0, 1}, {1, 0, 2}, {1, 1, 1}, {1, 1, 2}};
    std::ostringstream detail;
    detail << "r^2-scaled residuals stay within 2x across doublings;";
    for (const Combo& combo : combos) {
        // Exact smooth-model data: F(X, L) and the average potential u_bar
        // = -F0 under the weight convention weight(x^I) = +<alpha, I>.
        const FutakiResult base = futaki(VarietySpec(unit_simplex(combo.a1, combo.a2)), 2);
        ResolutionData data;
        data.n = 2;
        data.Ln = Rational(1);
        data.FXL = base.F1;
        data.u_bar = -base.F0;
        SingularPointData sp;
        sp.label = "p";
        sp.u_p = Rational(0); // the cut corner sits at the origin, weight 0
        sp.b_p = Rational(combo.b);
        sp.KM_Ep_nminus1 = Rational(-1);
        sp.Ep_n = Rational(-1);
        data.points.push_back(sp);
        const Rational coro = corollary_leading(data);

        std::vector<Rational> scaled;
        for (long r : {8L, 16L, 32L}) {
            const Rational f_r =
                futaki(VarietySpec(cut_simplex(r, combo.b, combo.a1, combo.a2)), 2).F1;
            const Rational residual = f_r - (data.FXL + coro / Rational(r));
            scaled.push_back(Rational(r * r) * abs(residual));
        }
        std::ostringstream msg;
        msg << "alpha=(" << combo.a1 << "," << combo.a2 << "), b=" << combo.b;
        check(scaled[1] <= Rational(2) * scaled[0] && scaled[0] <= Rational(2) * scaled[1],
              msg.str() + ": residual not O(r^-2) between r=8 and r=16");
        check(scaled[2] <= Rational(2) * scaled[1] && scaled[1] <= Rational(2) * scaled[2],
              msg.str() + ": residual not O(r^-2) between r=16 and r=32");
        if (combo.a1 == 1 && combo.a2 == 0 && combo.b == 1) {
            detail << " e.g. alpha=(1,0), b=1 gives " << scaled[0].to_string() << ", "
                   << scaled[1].to_string() << ", " << scaled[2].to_string();
        }
    }
    return detail.str();
}

// --- 8. theorem and corollary agree on their shared terms -----------------

std::string check_theorem_corollary() {
    std::mt19937 rng(0xC8);
    const auto centered = [&rng](long span) {
        return static_cast<long>(rng() % (2 * span + 1)) - span;
    };
    for (int i = 0; i < 20; ++i) {
        ResolutionData data;
        data.n = 2 + static_cast<int>(rng() % 3);
        data.Ln = Rational(1 + static_cast<long>(rng() % 8), 1 + static_cast<long>(rng() % 3));
        data.FXL = Rational(centered(4), 1 + static_cast<long>(rng() % 3));
        data.u_bar = Rational(centered(4), 1 + static_cast<long>(rng() % 3));
        data.KX_Lnminus1 = Rational(centered(5), 1 + static_cast<long>(rng() % 2));
        const int n_points = 1 + static_cast<int>(rng() % 3);
        for (int p = 0; p < n_points; ++p) {
            SingularPointData sp;
            sp.label = "p" + std::to_string(p);
            sp.u_p = Rational(centered(4), 1 + static_cast<long>(rng() % 3));
            sp.b_p = Rational(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 2));
            sp.KM_Ep_nminus1 = Rational(centered(3));
            sp.Ep_n = Rational(centered(3));
            sp.delta_u_p = Rational(centered(4), 1 + static_cast<long>(rng() % 2));
            data.points.push_back(std::move(sp));
        }
        const AsymptoticExpansion expansion = theorem_expansion(data);
        std::ostringstream msg;
        msg << "randomized instance " << i;
        check(expansion.coefficient_at(0) == data.FXL,
              msg.str() + ": r^0 term differs from F(X,L)");
        check(expansion.coefficient_at(1 - data.n) == corollary_leading(data),
              msg.str() + ": r^{1-n} term differs from the corollary value");
    }
    return "20 randomized resolution instances: theorem terms at r^0 and r^{1-n} match "
           "{F(X,L), corollary}";
}

// --- 9. the instability verdict logic ---------------------------------------

std::string check_cubic_verdicts() {
    // F_Delta: exhaustive grid, verdict iff the three K_M.(bE)^2 differ.
    const CubicModel delta = CubicModel::F_Delta();
    int unstable_count = 0;
    for (long e0 = -3; e0 <= 0; ++e0)
        for (long e1 = -3; e1 <= 0; ++e1)
            for (long e2 = -3; e2 <= 0; ++e2)
                for (long b0 = 1; b0 <= 2; ++b0)
                    for (long b1 = 1; b1 <= 2; ++b1)
                        for (long b2 = 1; b2 <= 2; ++b2) {
                            const ResolutionNumbers nums = {
                                {"p0", {Rational(b0), Rational(e0)}},
                                {"p1", {Rational(b1), Rational(e1)}},
                                {"p2", {Rational(b2), Rational(e2)}},
                            };
                            const Rational v0(b0 * b0 * e0), v1(b1 * b1 * e1), v2(b2 * b2 * e2);
                            const bool expect_unstable = !(v0 == v1 && v1 == v2);
                            const Report rep = instability_report(delta, nums, std::nullopt);
                            std::ostringstream msg;
                            msg << "F_Delta grid instance e=(" << e0 << "," << e1 << "," << e2
                                << "), b=(" << b0 << "," << b1 << "," << b2 << ")";
                            check((rep.verdict == Verdict::UNSTABLE) == expect_unstable,
                                  msg.str() + ": verdict contradicts the all-equal criterion");
                            if (expect_unstable) {
                                check(rep.witness_alpha.has_value(),
                                      msg.str() + ": unstable verdict lacks a witness");
                                const auto& w = *rep.witness_alpha;
                                const Rational expected =
                                    Rational(-1, 2) * (Rational(w[0]) * v0 + Rational(w[1]) * v1 +
                                                       Rational(w[2]) * v2);
                                check(rep.coefficient == expected && !rep.coefficient.is_zero(),
                                      msg.str() + ": witness coefficient incorrect or zero");
                                ++unstable_count;
                            } else {
                                check(rep.coefficient.is_zero() && !rep.witness_alpha.has_value(),
                                      msg.str() + ": inconclusive report must carry no witness");
                            }
                        }

    // F_AB: randomized grid; verdict iff v0 + v4 != 0, A1 entry irrelevant.
    std::mt19937 rng(0xAB);
    const Rational beta_choices[] = {Rational(0), Rational(2), Rational(1, 2), Rational(-1),
                                     Rational(3)};
    for (int i = 0; i < 100; ++i) {
        const Rational beta = beta_choices[rng() % 5];
        const CubicModel model = CubicModel::F_AB(beta);
        const long b0 = 1 + static_cast<long>(rng() % 3);
        const long b4 = 1 + static_cast<long>(rng() % 3);
        const long e0 = static_cast<long>(rng() % 7) - 3;
        const long e4 = static_cast<long>(rng() % 7) - 3;
        ResolutionNumbers nums = {
            {"p0", {Rational(b0), Rational(e0)}},
            {"p4", {Rational(b4), Rational(e4)}},
        };
        if (beta.is_zero()) {
            nums.emplace("p2", PointNumbers{Rational(1 + static_cast<long>(rng() % 3)),
                                            Rational(static_cast<long>(rng() % 7) - 3)});
        }
        const Rational v0(b0 * b0 * e0), v4(b4 * b4 * e4);
        const Report rep = instability_report(model, nums, std::nullopt);
        std::ostringstream msg;
        msg << "F_AB randomized instance " << i;
        check((rep.verdict == Verdict::UNSTABLE) == !(v0 + v4).is_zero(),
              msg.str() + ": verdict contradicts the v0 + v4 criterion");
        check(rep.coefficient == v0 - v4,
              msg.str() + ": coefficient differs from the c=1 value v0 - v4");
        if (beta.is_zero()) {
            ResolutionNumbers varied = nums;
            varied["p2"] = PointNumbers{varied["p2"].b + Rational(1),
                                        varied["p2"].KM_E2 - Rational(1)};
            const Report rep2 = instability_report(model, varied, std::nullopt);
            check(rep2.verdict == rep.verdict && rep2.coefficient == rep.coefficient &&
                      rep2.witness_alpha == rep.witness_alpha,
                  msg.str() + ": varying the A1-point entry changed the report");
        }
    }

    // Deterministic edges: canceling A5 entries (inconclusive despite a
    // nonzero c=1 coefficient), equal A5 entries (unstable with vanishing
    // c=1 coefficient, hence no witness), and the all-zero instance.
    {
        const CubicModel model = CubicModel::F_AB(Rational(0));
        const ResolutionNumbers nums = {{"p0", {Rational(1), Rational(3)}},
                                        {"p2", {Rational(2), Rational(-3)}},
                                        {"p4", {Rational(1), Rational(-3)}}};
        const Report rep = instability_report(model, nums, std::nullopt);
        check(rep.verdict == Verdict::INCONCLUSIVE_AT_THIS_ORDER &&
                  rep.coefficient == Rational(6) && !rep.witness_alpha.has_value(),
              "F_AB edge: canceling A5 entries must be inconclusive without witness");
    }
    {
        const CubicModel model = CubicModel::F_AB(Rational(2));
        const ResolutionNumbers nums = {{"p0", {Rational(1), Rational(-2)}},
                                        {"p4", {Rational(1), Rational(-2)}}};
        const Report rep = instability_report(model, nums, std::nullopt);
        check(rep.verdict == Verdict::UNSTABLE && rep.coefficient.is_zero() &&
                  !rep.witness_alpha.has_value(),
              "F_AB edge: equal A5 entries are unstable with zero c=1 coefficient");
    }
    {
        const CubicModel model = CubicModel::F_AB(Rational(2));
        const ResolutionNumbers nums = {{"p0", {Rational(1), Rational(0)}},
                                        {"p4", {Rational(1), Rational(0)}}};
        const Report rep = instability_report(model, nums, std::nullopt);
        check(rep.verdict == Verdict::INCONCLUSIVE_AT_THIS_ORDER && rep.coefficient.is_zero(),
              "F_AB edge: vanishing entries must be inconclusive");
    }

    std::ostringstream detail;
    detail << "F_Delta exhaustive grid (512 instances, " << unstable_count
           << " unstable) and F_AB randomized grid (100 instances): verdict logic exact";
    return detail.str();
}

} // namespace

Suite suite_from_name(const std::string& name) {
    if (name == "oracles") return Suite::oracles;
    if (name == "invariance") return Suite::invariance;
    if (name == "decay") return Suite::decay;
    if (name == "calibration") return Suite::calibration;
    if (name == "cubics") return Suite::cubics;
    if (name == "all") return Suite::all;
    throw invalid_input("unknown verification suite '" + name +
                        "' (expected oracles, invariance, decay, calibration, cubics, or all)");
}

std::vector<CheckResult> run_suite(Suite suite, std::uint64_t enum_cap) {
    const auto wants = [suite](Suite s) { return suite == Suite::all || suite == s; };
    std::vector<CheckResult> results;
    if (wants(Suite::oracles)) {
        results.push_back(run_check("oracle-equivalence",
                                    [enum_cap] { return check_oracle_equivalence(enum_cap); }));
    }
    if (wants(Suite::invariance)) {
        results.push_back(run_check("linearization-invariance", check_linearization_invariance));
        results.push_back(run_check("power-invariance", check_power_invariance));
    }
    if (wants(Suite::cubics)) {
        results.push_back(run_check("cubic-polystability-vanishing", check_cubic_polystability));
    }
    if (wants(Suite::decay)) {
        results.push_back(run_check("pullback-equality", check_pullback_equality));
        results.push_back(run_check("continuity-decay", check_continuity_decay));
    }
    if (wants(Suite::calibration)) {
        results.push_back(run_check("corollary-calibration", check_corollary_calibration));
        results.push_back(run_check("theorem-corollary-consistency", check_theorem_corollary));
    }
    if (wants(Suite::cubics)) {
        results.push_back(run_check("cubic-instability-verdicts", check_cubic_verdicts));
    }
    return results;
}

} // namespace futaki

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "futaki/expansion.hpp"
#include "futaki/rational.hpp"

namespace futaki {

/// Per-point input data at an isolated singular (or blown-up) point p:
/// the potential value u(p), the exceptional coefficient b_p > 0 of the
/// adiabatic polarization L_r = pi*L^r (x) O(-sum b_p E_p), and the two
/// intersection numbers controlling the correction terms.  delta_u_p is
/// the Laplacian-type datum entering only the r^{-n} term.
struct SingularPointData {
    std::string label;
    Rational u_p;
    Rational b_p;
    Rational KM_Ep_nminus1; // K_M . E_p^{n-1}
    Rational Ep_n;          // E_p^n
    std::optional<Rational> delta_u_p;
};

/// Global data of a polarized resolution pi: M -> X of an n-fold with
/// isolated singular set, feeding the adiabatic expansion of F(M, L_r).
struct ResolutionData {
    int n = 0;     // dimension, >= 2
    Rational Ln;   // L^n > 0
    Rational FXL;  // F(X, L)
    Rational u_bar;
    std::vector<SingularPointData> points;
    std::optional<Rational> KX_Lnminus1; // K_X . L^{n-1}, for s-bar and d_0

    void validate() const;
};

/// Truncated coefficient polynomials of the expansion data
///   chi(L_r^k)    = c(r) k^n     + d(r) k^{n-1} + O(k^{n-2})
///   weight(L_r^k) = a(r) k^{n+1} + b(r) k^n     + O(k^{n-1})
/// in the shapes a(r) = a0 r^{n+1} + a_n r + a_{n+1},
/// b(r) = b0 r^n + b_{n-1} r + b_n, c(r) = c0 r^n + c_n,
/// d(r) = d0 r^{n-1} + d_{n-1}.
struct CoefficientFamily {
    Rational a0, a_n, a_n1;
    Rational b0, b_nm1, b_n;
    Rational c0, c_n;
    Rational d0, d_nm1;
};

/// The leading (r-independent) metric-side data of the smooth model:
/// a0, b0, d0, plus the optional per-point integrals feeding a_{n+1}
/// (absent entries default to 0; a_{n+1} first contributes at r^{-n-1},
/// beyond every output truncated at r^{-n}).
struct MetricInputs {
    Rational a0, b0, d0;
    std::map<std::string, Rational> up_integrals;
};

/// Expansion of F(M, L_r) = b(r)/c(r) - a(r)d(r)/c(r)^2 through r^{-n}:
///   r^0    : b0/c0 - a0 d0 / c0^2
///   r^{1-n}: b_{n-1}/c0 - a0 d_{n-1} / c0^2
///   r^{-n} : b_n/c0 + (d0/c0)(a0 c_n - c0 a_n)/c0^2 - (c_n/c0)(r^0 term)
/// Requires n >= 2; throws invalid_input when c0 = 0.
AsymptoticExpansion expansion_from_abcd(const CoefficientFamily& fam, int n);

/// Assembles the correction coefficients from resolution data, with
/// R_p = -K_M . E_p^{n-1} (the Ricci-form pairing under the convention
/// that Ric represents c_1(-K)):
///   c0 = L^n/n!,            c_n     = sum_p b_p^n   E_p^n / n!
///   a_n = sum_p b_p^n u(p) E_p^n / n!,   a_{n+1} = sum_p b_p^{n+1} up_integral_p
///   b_{n-1} = sum_p u(p) b_p^{n-1} R_p / (2(n-1)!)
///   b_n     = -(1/2) sum_p delta_u(p) b_p^n E_p^n / n!
///   d_{n-1} = sum_p b_p^{n-1} R_p / (2(n-1)!)
/// delta_u_p is required for every point (incomplete_input otherwise).
CoefficientFamily build_coefficients(const ResolutionData& data, const MetricInputs& metric);

/// The closed-form expansion of F(M, L_r) through r^{-n}:
///   r^0    : F(X, L)
///   r^{1-n}: (n/2) sum_p (u(p) - u_bar) b_p^{n-1} R_p / L^n,
///            R_p = -K_M . E_p^{n-1}
///   r^{-n} : -(1/2) sum_p (s_bar (u(p) - u_bar) + delta_u(p) + 2 F(X,L))
///            * b_p^n E_p^n / L^n,   s_bar = -(n/2) K_X . L^{n-1} / L^n
/// Requires delta_u_p for every point and KX_Lnminus1 (incomplete_input).
AsymptoticExpansion theorem_expansion(const ResolutionData& data);

/// Expansion truncated at r^{-depth} (0 <= depth <= n): depths below n-1
/// need no optional fields, depth n-1 adds the r^{1-n} correction, depth n
/// is theorem_expansion.  Deeper truncations throw invalid_input.
AsymptoticExpansion resolution_expansion(const ResolutionData& data, int depth);

/// The r^{1-n} coefficient in intersection-number form:
///   -(n / (2 L^n)) sum_p (u(p) - u_bar) b_p^{n-1} (K_M . E_p^{n-1}).
Rational corollary_leading(const ResolutionData& data);

} // namespace futaki

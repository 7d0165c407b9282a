#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "futaki/adiabatic.hpp"
#include "futaki/characters.hpp"
#include "futaki/cubic.hpp"
#include "futaki/futaki.hpp"

namespace futaki {

// ---------------------------------------------------------------------------
// Ingestion.  Rationals are accepted as "p/q" strings (or "p") and as JSON
// integers; every structural problem — wrong type, missing required field,
// unknown kind — throws invalid_input naming the offending field.
// ---------------------------------------------------------------------------

/// Parses a rational from a JSON string ("p/q" or "p") or integer number.
Rational rational_from_json(const nlohmann::json& value, const std::string& field);

/// Parses {"kind": "ambient" | "hypersurface" | "polytope", ...} with the
/// field names of the corresponding spec type; linearization_shift
/// defaults to 0 when absent.
VarietySpec variety_spec_from_json(const nlohmann::json& doc);

/// Parses {"n", "Ln", "FXL", "u_bar", "KX_Lnminus1"?, "points": [{"label",
/// "u_p", "b_p", "KM_Ep_nminus1", "Ep_n", "delta_u_p"?}]}.
ResolutionData resolution_data_from_json(const nlohmann::json& doc);

/// A cubic-catalog invocation: which model, the per-point resolution
/// numbers, and optionally explicit action parameters.
struct CubicRequest {
    CubicModel model;
    ResolutionNumbers numbers;
    std::optional<std::vector<long>> params;
};

/// Parses {"model": "F_Delta" | "F_AB", "beta": rational (F_AB only,
/// required there), "params": [integers]?, "numbers": {label: {"b",
/// "KM_E2"}}}.
CubicRequest cubic_request_from_json(const nlohmann::json& doc);

// ---------------------------------------------------------------------------
// Emission.  Rationals serialize as "p/q" (or "p" when the denominator is
// 1); polynomials as arrays of such strings, lowest degree first.  Objects
// are emitted with sorted keys, so identical data yields identical bytes.
// ---------------------------------------------------------------------------

nlohmann::json rational_to_json(const Rational& value);
nlohmann::json polynomial_to_json(const Polynomial& poly);

/// {"F0", "F1", "chi_poly", "weight_poly"} plus "deeper_terms" when
/// include_deeper is set (coefficients of k^-1, k^-2, ...).
nlohmann::json futaki_result_to_json(const FutakiResult& result, bool include_deeper);

/// {"terms": [{"order": "r^e", "coefficient", "requires": [...]}, ...],
/// "corollary_leading", "truncation"}; the r^-n term lists the optional
/// inputs it consumed.
nlohmann::json expansion_to_json(const AsymptoticExpansion& expansion,
                                 const Rational& corollary, int n);

/// {"verdict", "coefficient", "order"} plus "witness_alpha" when present.
nlohmann::json report_to_json(const Report& report);

// ---------------------------------------------------------------------------
// Text rendering: a human-readable view of exactly the same data.
// ---------------------------------------------------------------------------

/// "3*k^2 + 1/2*k - 5" style, highest degree first; "0" for the zero
/// polynomial.
std::string polynomial_to_text(const Polynomial& poly, const std::string& var);

std::string futaki_result_to_text(const FutakiResult& result, bool include_deeper);
std::string expansion_to_text(const AsymptoticExpansion& expansion,
                              const Rational& corollary, int n);
std::string report_to_text(const Report& report);

} // namespace futaki

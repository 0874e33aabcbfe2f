#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wwlab/qseries.hpp"

namespace wwlab {

/// `a+2*c^2-b*d^-1`, terms in CanonicalOrder; "0" for the zero polynomial.
std::string to_text(const CoeffPoly& p);
CoeffPoly parse_coeff_poly(std::string_view text);

/// `1 + (a+c+d)*q + (a*d)*q^2 + O(q^3)`. The constant coefficient is printed
/// bare when it is a single term.
std::string to_text(const QSeries& s);
QSeries parse_series(std::string_view text);

/// {"trunc": N, "coeffs": [[[[i,j,k,l], c], ...] per q-power]}
nlohmann::json to_json(const QSeries& s);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace wwlab

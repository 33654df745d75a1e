#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sg/bounds.hpp"
#include "sg/max2sat.hpp"
#include "sg/rounding.hpp"
#include "sg/schemes.hpp"

namespace sg {

inline constexpr std::string_view kReportSchema = "scheme-gauge-report/1";
inline constexpr int kSignificantDigits = 12;

/// x rounded to 12 significant digits (and -0 folded to 0), so that JSON
/// output is short and identical across runs and platforms.
double round_sig(double x);

/// "%.12g" formatting used for CSV cells.
std::string format_number(double x);

/// Tolerances applied by the library, keyed by the quantity they govern.
nlohmann::json tolerances_json();

/// Schemes up to this order also carry their n x n class-index matrix.
inline constexpr std::size_t kColorMatrixLimit = 64;

nlohmann::json scheme_json(const AssociationScheme& s);
nlohmann::json matrix_json(const Matrix& m);
nlohmann::json bounds_json(const BoundsReport& r);
nlohmann::json rounding_json(const RoundingResult& r);
nlohmann::json max2sat_json(const Max2SatReport& r);

/// Flat batch row; column order is fixed:
/// index,graph,n,edges1,edges2,status,eta,eta_dual,eta_product,gamma,
/// gamma_dual,gamma_dual_method,gamma_product,gap,classification
std::vector<std::string> batch_csv_header();
std::vector<std::string> batch_csv_row(std::size_t index, const BoundsReport& r,
                                       std::string_view status);
/// RFC 4180 quoting when a cell contains a comma, quote or newline.
std::string csv_line(const std::vector<std::string>& cells);

} // namespace sg

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fractal/biased_lift.hpp"
#include "fractal/sparse_paving.hpp"

namespace fractal {

/// One size of a ratio table: members m, excluded minors x and
/// gamma = x / (m + x) as a reduced fraction. The mode strings say whether a
/// count is exact or a bound ("exact", "upper" for m; "exact", "lower" for x).
struct GammaRow {
  int n = 0;
  std::uint64_t m_count = 0;
  std::string m_mode;
  std::uint64_t x_count = 0;
  std::string x_mode;
  std::uint64_t gamma_num = 0;
  std::uint64_t gamma_den = 1;

  double gamma() const { return static_cast<double>(gamma_num) / static_cast<double>(gamma_den); }
  friend bool operator==(const GammaRow&, const GammaRow&) = default;
};

GammaRow make_gamma_row(int n, std::uint64_t m, std::string m_mode, std::uint64_t x, std::string x_mode);

/// P_k rows for n in [n_lo, n_hi]. x counts sparse paving excluded minors
/// only, so it is flagged as a lower bound.
std::vector<GammaRow> gamma_pk_table(int k, int n_lo, int n_hi);

/// S_k rows for sizes 2t, t in [t_lo, t_hi]: m from the strata upper bound, x
/// from bottom constructions deduplicated by glance key (a lower bound). With
/// `odd_rows`, the sizes 2t+1 are added with x = 0 and m from the exact census
/// (n <= 12).
std::vector<GammaRow> gamma_sk_table(int k, int t_lo, int t_hi, bool odd_rows = false);

/// Distinct glance keys among the bottom constructions for (t, k).
std::uint64_t bottom_class_count(int t, int k);

struct SlopeEstimate {
  double exponent = 0.0;
  std::pair<double, double> window;
  double residual = 0.0;  // root mean square of the fit residuals
};

/// Least-squares slope of log(count) against log(size) over the points whose
/// size lies in [lo, hi]. Needs at least five points with positive values
/// (DegenerateSeries).
SlopeEstimate slope_fit(const std::vector<std::pair<double, long double>>& series, double lo, double hi);

void write_gamma_csv(std::ostream& out, const std::vector<GammaRow>& rows);
void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows);
void write_strata_csv(std::ostream& out, const std::vector<StrataRow>& rows);

/// Decimal text for a fraction, 15 digits after the point.
std::string decimal_string(std::uint64_t num, std::uint64_t den);

}  // namespace fractal

#include "fractal/gamma.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "fractal/error.hpp"
#include "fractal/parallel.hpp"

namespace fractal {

GammaRow make_gamma_row(int n, std::uint64_t m, std::string m_mode, std::uint64_t x, std::string x_mode) {
  GammaRow row{n, m, std::move(m_mode), x, std::move(x_mode), 0, 1};
  const std::uint64_t den = m + x;
  if (den != 0 && x != 0) {
    const std::uint64_t g = std::gcd(x, den);
    row.gamma_num = x / g;
    row.gamma_den = den / g;
  }
  return row;
}

std::vector<GammaRow> gamma_pk_table(int k, int n_lo, int n_hi) {
  std::vector<GammaRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const std::uint64_t m = census_total(census_pk(n, k));
    const std::uint64_t x = sp_excluded_minors(n, k).size();
    rows.push_back(make_gamma_row(n, m, "exact", x, "lower"));
  }
  return rows;
}

std::uint64_t bottom_class_count(int t, int k) {
  if (t < 2 * (k + 1)) return 0;
  std::set<GlanceKey> keys;
  for_each_bottom_solution(t, k, [&](const CompositionSolution& phi) {
    keys.insert(glance_signature(bottom_construct(phi, t, k)));
  });
  return keys.size();
}

std::vector<GammaRow> gamma_sk_table(int k, int t_lo, int t_hi, bool odd_rows) {
  if (k < 2) fail(ErrorCode::BoundTooLarge, "S_k ratio tables need k >= 2");
  const int count = std::max(0, t_hi - t_lo + 1);
  std::vector<GammaRow> even(count);
  parallel_for(static_cast<std::size_t>(count), [&](std::size_t i) {
    const int t = t_lo + static_cast<int>(i);
    const std::uint64_t m = strata_total(census_sk_strata(2 * t, k));
    even[i] = make_gamma_row(2 * t, m, "upper", bottom_class_count(t, k), "lower");
  });
  std::vector<GammaRow> rows;
  for (int i = 0; i < count; ++i) {
    rows.push_back(even[i]);
    if (odd_rows) {
      const int n = 2 * (t_lo + i) + 1;
      rows.push_back(make_gamma_row(n, census_sk_exact(n, k), "exact", 0, "lower"));
    }
  }
  return rows;
}

SlopeEstimate slope_fit(const std::vector<std::pair<double, long double>>& series, double lo, double hi) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [size, value] : series) {
    if (size < lo || size > hi) continue;
    if (!(size > 0) || !(value > 0)) fail(ErrorCode::DegenerateSeries, "sizes and counts must be positive");
    pts.emplace_back(std::log(size), static_cast<double>(std::log(value)));
  }
  if (pts.size() < 5) fail(ErrorCode::DegenerateSeries, "need at least five points in the window");
  double mx = 0;
  double my = 0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0;
  double sxy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) fail(ErrorCode::DegenerateSeries, "all sizes coincide");
  const double slope = sxy / sxx;
  double ss = 0;
  for (const auto& [x, y] : pts) {
    const double r = y - (my + slope * (x - mx));
    ss += r * r;
  }
  return SlopeEstimate{slope, {lo, hi}, std::sqrt(ss / static_cast<double>(pts.size()))};
}

std::string decimal_string(std::uint64_t num, std::uint64_t den) {
  // long division keeps every printed digit exact
  std::string out = std::to_string(num / den) + ".";
  std::uint64_t rem = num % den;
  for (int i = 0; i < 15; ++i) {
    // rem * 10 as ten additions so nothing overflows
    std::uint64_t next = 0;
    int digit = 0;
    for (int j = 0; j < 10; ++j) {
      if (rem >= den - next) {
        next = rem - (den - next);
        ++digit;
      } else {
        next += rem;
      }
    }
    out += static_cast<char>('0' + digit);
    rem = next;
  }
  return out;
}

void write_gamma_csv(std::ostream& out, const std::vector<GammaRow>& rows) {
  out << "n,m_count,m_mode,x_count,x_mode,gamma_num,gamma_den,gamma\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.m_count << ',' << r.m_mode << ',' << r.x_count << ',' << r.x_mode << ',' << r.gamma_num
        << ',' << r.gamma_den << ',' << decimal_string(r.gamma_num, r.gamma_den) << '\n';
  }
}

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << "n,k,m,count\n";
  for (const auto& r : rows) out << r.n << ',' << r.k << ',' << r.m << ',' << r.count << '\n';
}

void write_strata_csv(std::ostream& out, const std::vector<StrataRow>& rows) {
  out << "n,k,category,r,m,count,mode\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << category_letter(r.category) << ',' << r.r << ',' << r.m << ',' << r.count << ','
        << (r.exact ? "exact" : "upper") << '\n';
  }
}

}  // namespace fractal

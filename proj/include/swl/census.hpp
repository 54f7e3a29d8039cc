#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "swl/surface_complex.hpp"
#include "swl/word.hpp"

namespace swl {

/// Primitive slope (p, q) up to sign: p > 0, or (0, 1).
struct Slope {
  long long p = 0;
  long long q = 0;
  friend auto operator<=>(const Slope&, const Slope&) = default;
};

/// Canonical representative; throws non_coprime for gcd != 1 or (0, 0).
Slope canonical_slope(long long p, long long q);

/// Lower Christoffel word of the slope over generators 0 and 1 (the second
/// letter inverted when q < 0). Length |p| + |q|, cyclically reduced.
Word christoffel_word(long long p, long long q);

enum class CountMode { fast, engine };

/// Optional change of free basis: the curve of slope (p, q) is replaced by its
/// image under the substitution of generator 0 and 1 by these words.
struct BasisChange {
  Word first;
  Word second;
};

struct CountOptions {
  CountMode mode = CountMode::fast;
  unsigned jobs = 1;
  std::optional<BasisChange> basis;
};

struct CountSeries {
  std::vector<std::pair<long long, long long>> points;  // (L, count)
  CountMode mode = CountMode::fast;
  std::string basis = "standard";
};

/// Number of slope classes whose curve has cyclic length at most L, for each
/// requested L. The complex must be a one-holed torus whose generators 0 and
/// 1 form a free basis; fast mode additionally needs exactly those two
/// generators.
CountSeries orbit_count_series(const Complex& complex, const std::vector<long long>& Ls,
                               const CountOptions& options = {});
long long orbit_count_torus(const Complex& complex, long long L, const CountOptions& options = {});

struct PowerFit {
  double exponent = 0;
  double constant = 0;
};

/// Least squares on log count against log L. Needs at least four points
/// spanning two octaves.
PowerFit fit_exponent(const CountSeries& series);

std::string series_to_csv(const CountSeries& series);
nlohmann::ordered_json series_to_json(const CountSeries& series, const PowerFit& fit);

const char* to_string(CountMode mode);

}  // namespace swl

#include "swl/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <mutex>
#include <thread>

#include "swl/cover_oracle.hpp"
#include "swl/error.hpp"
#include "swl/geodesic_engine.hpp"

namespace swl {

Slope canonical_slope(long long p, long long q) {
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::non_coprime,
                "slope (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
  }
  if (p < 0 || (p == 0 && q < 0)) return {-p, -q};
  return {p, q};
}

Word christoffel_word(long long p, long long q) {
  const Slope s = canonical_slope(p, q);
  const long long aq = s.q < 0 ? -s.q : s.q;
  const long long n = s.p + aq;
  const Dart first = Dart::of(0, false);
  const Dart second = Dart::of(1, s.q < 0);
  Word w;
  for (long long i = 1; i <= n; ++i) {
    const bool step = (i * aq) / n > ((i - 1) * aq) / n;
    w.push_back(step ? second : first);
  }
  return w;
}

const char* to_string(CountMode mode) { return mode == CountMode::fast ? "fast" : "engine"; }

namespace {

void require_torus(const Complex& complex) {
  if (complex.genus() != 1 || complex.boundary_count() != 1) {
    throw Error(ErrorKind::wrong_surface, "orbit counting needs a one-holed torus");
  }
}

// hist[s] = number of slope classes with |p| + |q| = s.
std::vector<long long> slope_histogram(long long max_sum) {
  std::vector<long long> phi(static_cast<std::size_t>(max_sum) + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (long long i = 2; i <= max_sum; ++i) {
    if (phi[i] != i) continue;
    for (long long j = i; j <= max_sum; j += i) phi[j] -= phi[j] / i;
  }
  std::vector<long long> hist(phi.size(), 0);
  if (max_sum >= 1) hist[1] = 2;
  for (long long s = 2; s <= max_sum; ++s) hist[s] = 2 * phi[s];
  return hist;
}

Word substitute(const Word& w, const BasisChange& b) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Word& img = w[i].generator() == 0 ? b.first : b.second;
    out.append(w[i].is_inverse() ? img.inverse() : img);
  }
  return out;
}

std::array<long long, 2> abelianize(const Word& w) {
  std::array<long long, 2> v{0, 0};
  for (std::size_t i = 0; i < w.size(); ++i) v[w[i].generator()] += w[i].is_inverse() ? -1 : 1;
  return v;
}

}  // namespace

CountSeries orbit_count_series(const Complex& complex, const std::vector<long long>& Ls,
                               const CountOptions& options) {
  require_torus(complex);
  CountSeries series;
  series.mode = options.mode;
  const long long top = Ls.empty() ? 0 : *std::max_element(Ls.begin(), Ls.end());
  std::vector<long long> hist;

  if (options.mode == CountMode::fast) {
    if (complex.num_generators() != 2 || complex.has_disk_faces() || options.basis) {
      throw Error(ErrorKind::wrong_surface, "fast mode needs the standard two-generator basis");
    }
    hist = slope_histogram(std::max(top, 1LL));
  } else {
    const auto nf = FreeNormalForm::build(complex);
    if (!nf || !nf->is_free_basis({0, 1})) {
      throw Error(ErrorKind::wrong_surface, "generators 0 and 1 must form a free basis");
    }
    // Cyclic length over the basis is at most `stretch` times the length over
    // the generating set, so longer slopes cannot reach L.
    long long stretch = 1;
    for (std::size_t c = 0; c < complex.num_darts(); ++c) {
      stretch = std::max<long long>(stretch, static_cast<long long>(nf->image(Dart(c)).size()));
    }
    std::string basis_name = "standard";
    if (options.basis) {
      const auto u = abelianize(options.basis->first);
      const auto v = abelianize(options.basis->second);
      const long long det = u[0] * v[1] - u[1] * v[0];
      if (det != 1 && det != -1) {
        throw Error(ErrorKind::non_coprime, "basis change is not unimodular");
      }
      // Column sums of the inverse matrix bound how much slopes shrink.
      const long long inv_norm = std::max(std::llabs(v[1]) + std::llabs(u[1]),
                                          std::llabs(v[0]) + std::llabs(u[0]));
      stretch *= inv_norm;
      basis_name = "substituted";
    }
    series.basis = basis_name;
    const long long max_sum = stretch * top;
    std::vector<Slope> slopes;
    if (max_sum >= 1) {
      slopes.push_back({1, 0});
      slopes.push_back({0, 1});
    }
    for (long long s = 2; s <= max_sum; ++s) {
      for (long long p = 1; p < s; ++p) {
        if (std::gcd(p, s) != 1) continue;
        slopes.push_back({p, s - p});
        slopes.push_back({p, p - s});
      }
    }
    const GeodesicEngine engine(complex);
    std::vector<long long> lengths(slopes.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        for (std::size_t i = next++; i < slopes.size(); i = next++) {
          Word w = christoffel_word(slopes[i].p, slopes[i].q);
          if (options.basis) w = substitute(w, *options.basis);
          lengths[i] = static_cast<long long>(engine.cyclic_shortest(w).length);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        failure = std::current_exception();
        next = slopes.size();
      }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    hist.assign(static_cast<std::size_t>(std::max(top, 1LL)) + 1, 0);
    for (long long len : lengths) {
      if (len <= top) ++hist[static_cast<std::size_t>(len)];
    }
  }
  std::vector<long long> cumulative(hist.size(), 0);
  for (std::size_t s = 1; s < hist.size(); ++s) cumulative[s] = cumulative[s - 1] + hist[s];
  for (long long L : Ls) {
    const long long count = L <= 0 ? 0 : cumulative[static_cast<std::size_t>(L)];
    series.points.emplace_back(L, count);
  }
  return series;
}

long long orbit_count_torus(const Complex& complex, long long L, const CountOptions& options) {
  return orbit_count_series(complex, {L}, options).points.front().second;
}

PowerFit fit_exponent(const CountSeries& series) {
  const auto& pts = series.points;
  if (pts.size() < 4) throw Error(ErrorKind::insufficient_data, "need at least four points");
  long long lo = pts.front().first;
  long long hi = lo;
  for (const auto& [L, c] : pts) {
    if (L <= 0 || c <= 0) throw Error(ErrorKind::insufficient_data, "points must be positive");
    lo = std::min(lo, L);
    hi = std::max(hi, L);
  }
  if (hi < 4 * lo) throw Error(ErrorKind::insufficient_data, "points must span two octaves");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(pts.size());
  for (const auto& [L, c] : pts) {
    const double x = std::log(static_cast<double>(L));
    const double y = std::log(static_cast<double>(c));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  return {slope, std::exp(intercept)};
}

std::string series_to_csv(const CountSeries& series) {
  std::string out = "L,count\n";
  for (const auto& [L, c] : series.points) out += std::to_string(L) + "," + std::to_string(c) + "\n";
  return out;
}

nlohmann::ordered_json series_to_json(const CountSeries& series, const PowerFit& fit) {
  nlohmann::ordered_json j;
  j["exponent"] = fit.exponent;
  j["constant"] = fit.constant;
  j["mode"] = to_string(series.mode);
  j["basis"] = series.basis;
  auto pts = nlohmann::ordered_json::array();
  for (const auto& [L, c] : series.points) pts.push_back({{"L", L}, {"count", c}});
  j["points"] = std::move(pts);
  j["orientation"] = "unoriented: (p,q) and (-p,-q) counted once";
  return j;
}

}  // namespace swl

#pragma once

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "swl/error.hpp"
#include "swl/surface_complex.hpp"
#include "swl/word.hpp"

namespace swl::testing {

/// Kind of the swl::Error that f throws, or nullopt when it returns.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::string data_path(const std::string& name) { return std::string(SWL_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Complex load(const std::string& name) {
  return build_complex(parse_surface_spec(slurp(data_path(name))));
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"torus.srf", "genus2.srf", "torus_abc.srf",
                                              "torus_two_triangles.srf"};
  return names;
}

/// Calls f on every freely reduced word of length exactly len.
template <class F>
void for_each_reduced_word(std::size_t generators, std::size_t len, F&& f) {
  const std::size_t darts = 2 * generators;
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (w.size() == len) {
      f(w);
      return;
    }
    for (std::size_t c = 0; c < darts; ++c) {
      const Dart d(static_cast<std::uint8_t>(c));
      if (!w.empty() && w[w.size() - 1] == d.inverse()) continue;
      w.push_back(d);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

inline Word random_reduced_word(std::mt19937_64& rng, std::size_t generators, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(2 * generators) - 1);
  Word w;
  while (w.size() < len) {
    const Dart d(static_cast<std::uint8_t>(pick(rng)));
    if (!w.empty() && w[w.size() - 1] == d.inverse()) continue;
    w.push_back(d);
  }
  return w;
}

inline Word random_cyclically_reduced_word(std::mt19937_64& rng, std::size_t generators,
                                           std::size_t len) {
  while (true) {
    Word w = random_reduced_word(rng, generators, len);
    if (len < 2 || w[0] != w[len - 1].inverse()) return w;
  }
}

}  // namespace swl::testing

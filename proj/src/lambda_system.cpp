#include "swl/lambda_system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "swl/error.hpp"

namespace swl {

namespace {

using PointId = LambdaSystem::PointId;

void pair_points(std::vector<PointId>& inv, PointId a, PointId b) {
  inv[a] = b;
  inv[b] = a;
}

std::vector<std::size_t> canonical_cycle(const std::vector<std::size_t>& seq) {
  std::vector<std::size_t> best = seq;
  const std::size_t n = seq.size();
  const std::vector<std::size_t> rev(seq.rbegin(), seq.rend());
  for (const auto* base : {&seq, &rev}) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::size_t> cand;
      cand.reserve(n);
      for (std::size_t i = 0; i < n; ++i) cand.push_back((*base)[(r + i) % n]);
      best = std::min(best, cand);
    }
  }
  return best;
}

}  // namespace

std::size_t LambdaSystem::crossings_on_edge(std::size_t generator) const {
  std::size_t count = 0;
  const Dart side = Dart::of(generator, false);
  for (int slot = 0; slot < 2; ++slot) {
    const PointId partner = glue_[point_id(side, slot)];
    if (point(partner).side == side.inverse()) ++count;
  }
  return count;
}

LambdaSystem build_lambda(const Complex& complex, SlotConvention convention) {
  LambdaSystem lam;
  lam.num_generators_ = complex.num_generators();
  lam.convention_ = convention;
  const std::size_t marked = lam.num_marked_points();
  lam.intra_.assign(marked, -1);
  lam.glue_.assign(marked, -1);

  auto pid = [](Dart side, int slot) { return LambdaSystem::point_id(side, slot); };

  for (const Face& f : complex.faces()) {
    const std::size_t m = f.size();
    auto side = [&](std::size_t i) { return f.sides[i % m]; };
    if (!f.is_disk()) {
      for (std::size_t i = 0; i < m; ++i) {
        for (int s = 0; s < 2; ++s) {
          const auto anchor = static_cast<PointId>(lam.intra_.size());
          lam.intra_.push_back(pid(side(i), s));
          lam.intra_[pid(side(i), s)] = anchor;
        }
      }
    } else if (m % 2 == 0) {
      // Opposite sides, two parallel strands.
      for (std::size_t i = 0; i < m / 2; ++i) {
        const std::size_t j = i + m / 2;
        pair_points(lam.intra_, pid(side(i), 0), pid(side(j), 1));
        pair_points(lam.intra_, pid(side(i), 1), pid(side(j), 0));
      }
    } else {
      // Pairing (i, a) with (i + ceil(m/2), b) for every i also pairs
      // (i, b) with (i + floor(m/2), a).
      const std::size_t hi = m - m / 2;
      const int near = convention == SlotConvention::standard ? 1 : 0;
      for (std::size_t i = 0; i < m; ++i) {
        pair_points(lam.intra_, pid(side(i), 1 - near), pid(side(i + hi), near));
      }
    }
  }

  lam.cases_.assign(complex.num_generators(), GlueCase::planar);
  for (std::size_t g = 0; g < complex.num_generators(); ++g) {
    const Dart fwd = Dart::of(g, false);
    const Dart bwd = fwd.inverse();
    const Face& fa = complex.face(complex.side_of(fwd).face);
    const Face& fb = complex.face(complex.side_of(bwd).face);
    const bool odd_disk_a = fa.is_disk() && fa.size() % 2 == 1;
    const bool odd_disk_b = fb.is_disk() && fb.size() % 2 == 1;
    const GlueCase gc = (odd_disk_a && odd_disk_b) ? GlueCase::crossing : GlueCase::planar;
    lam.cases_[g] = gc;
    if (gc == GlueCase::planar) {
      pair_points(lam.glue_, pid(fwd, 0), pid(bwd, 1));
      pair_points(lam.glue_, pid(fwd, 1), pid(bwd, 0));
    } else {
      pair_points(lam.glue_, pid(fwd, 0), pid(bwd, 0));
      pair_points(lam.glue_, pid(fwd, 1), pid(bwd, 1));
    }
  }
  return lam;
}

namespace {

LambdaComponent trace_arc_from_anchor(const LambdaSystem& lam, PointId anchor,
                                      std::vector<bool>* visited) {
  LambdaComponent c;
  PointId p = lam.intra(anchor);
  while (true) {
    if (visited) (*visited)[p] = true;
    const PointId q = lam.glue(p);
    if (visited) (*visited)[q] = true;
    c.crossings.push_back(lam.point(p).side.generator());
    const PointId r = lam.intra(q);
    if (lam.is_anchor(r)) break;
    p = r;
  }
  std::vector<std::size_t> rev(c.crossings.rbegin(), c.crossings.rend());
  c.crossings = std::min(c.crossings, rev);
  return c;
}

}  // namespace

LambdaComponent trace_component_from(const LambdaSystem& lam, PointId start) {
  if (lam.is_anchor(start)) return trace_arc_from_anchor(lam, start, nullptr);
  LambdaComponent c;
  c.closed = true;
  PointId p = start;
  while (true) {
    const PointId q = lam.glue(p);
    c.crossings.push_back(lam.point(p).side.generator());
    const PointId r = lam.intra(q);
    if (lam.is_anchor(r)) return trace_arc_from_anchor(lam, r, nullptr);
    if (r == start) break;
    p = r;
  }
  c.crossings = canonical_cycle(c.crossings);
  return c;
}

ComponentCensus trace_components(const LambdaSystem& lam) {
  ComponentCensus census;
  std::vector<bool> visited(lam.num_marked_points(), false);
  for (std::size_t a = lam.num_marked_points(); a < lam.num_points(); ++a) {
    const auto anchor = static_cast<PointId>(a);
    if (visited[lam.intra(anchor)]) continue;
    census.components.push_back(trace_arc_from_anchor(lam, anchor, &visited));
    ++census.arcs;
  }
  for (std::size_t s = 0; s < lam.num_marked_points(); ++s) {
    if (visited[s]) continue;
    PointId p = static_cast<PointId>(s);
    LambdaComponent c;
    c.closed = true;
    while (!visited[p]) {
      visited[p] = true;
      const PointId q = lam.glue(p);
      visited[q] = true;
      c.crossings.push_back(lam.point(p).side.generator());
      p = lam.intra(q);
    }
    c.crossings = canonical_cycle(c.crossings);
    census.components.push_back(std::move(c));
    ++census.curves;
  }
  std::sort(census.components.begin(), census.components.end());
  return census;
}

std::size_t ComponentCensus::total_crossings() const {
  std::size_t total = 0;
  for (const auto& c : components) total += c.crossings.size();
  return total;
}

Rational raw_crossing_count(const Word& word, const LambdaSystem& lambda) {
  Rational total(0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::size_t g = word[i].generator();
    if (g >= lambda.num_generators()) {
      throw Error(ErrorKind::unknown_generator, "letter uses generator index " + std::to_string(g) +
                                                    " outside the complex");
    }
    total += LambdaSystem::weight() * static_cast<long long>(lambda.crossings_on_edge(g));
  }
  return total;
}

nlohmann::ordered_json census_to_json(const Complex& complex, const ComponentCensus& census) {
  nlohmann::ordered_json j;
  j["curves"] = census.curves;
  j["arcs"] = census.arcs;
  auto comps = nlohmann::ordered_json::array();
  for (const auto& c : census.components) {
    nlohmann::ordered_json jc;
    jc["type"] = c.closed ? "curve" : "arc";
    auto crossings = nlohmann::ordered_json::array();
    for (auto g : c.crossings) crossings.push_back(complex.alphabet().names()[g]);
    jc["crossings"] = std::move(crossings);
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  return j;
}

namespace {

struct Pt {
  double x = 0;
  double y = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string emit_svg(const Complex& complex, const LambdaSystem& lambda) {
  if (complex.faces().empty()) throw Error(ErrorKind::invalid_face, "complex has no faces");
  constexpr double kRadius = 100.0;
  constexpr double kCell = 300.0;
  constexpr double kHole = 22.0;
  const std::size_t nf = complex.faces().size();

  // Screen position of every marked point, and polygon centres.
  std::vector<Pt> where(lambda.num_marked_points());
  std::vector<Pt> centre(nf);
  std::string body;
  for (const Face& f : complex.faces()) {
    const std::size_t m = f.size();
    const Pt c{kCell / 2 + kCell * static_cast<double>(f.id), kCell / 2};
    centre[f.id] = c;
    std::vector<Pt> corner(m);
    for (std::size_t k = 0; k < m; ++k) {
      const double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(k) /
                                                       static_cast<double>(m);
      corner[k] = {c.x + kRadius * std::cos(theta), c.y + kRadius * std::sin(theta)};
    }
    body += "  <polygon class=\"face\" data-face=\"" + std::to_string(f.id) + "\" points=\"";
    for (std::size_t k = 0; k < m; ++k) {
      body += (k ? " " : "") + fmt(corner[k].x) + "," + fmt(corner[k].y);
    }
    body += "\"/>\n";
    for (std::size_t k = 0; k < m; ++k) {
      const Pt a = corner[k];
      const Pt b = corner[(k + 1) % m];
      for (int s = 0; s < 2; ++s) {
        const double t = (s + 1) / 3.0;
        where[LambdaSystem::point_id(f.sides[k], s)] = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      }
      const Pt mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
      const Pt out{c.x + 1.18 * (mid.x - c.x), c.y + 1.18 * (mid.y - c.y)};
      body += "  <text class=\"label\" x=\"" + fmt(out.x) + "\" y=\"" + fmt(out.y) + "\">" +
              complex.alphabet().dart_name(f.sides[k]) + "</text>\n";
    }
    if (!f.is_disk()) {
      body += "  <circle class=\"hole\" cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" +
              fmt(kHole) + "\"/>\n";
    }
  }
  // Strands: one element per intra pair.
  for (std::size_t p = 0; p < lambda.num_marked_points(); ++p) {
    const auto id = static_cast<LambdaSystem::PointId>(p);
    const auto partner = lambda.intra(id);
    const Pt a = where[p];
    if (lambda.is_anchor(partner)) {
      const Pt c = centre[complex.side_of(lambda.point(id).side).face];
      const double dx = a.x - c.x;
      const double dy = a.y - c.y;
      const double len = std::hypot(dx, dy);
      const Pt h{c.x + kHole * dx / len, c.y + kHole * dy / len};
      body += "  <line class=\"strand\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" +
              fmt(h.x) + "\" y2=\"" + fmt(h.y) + "\"/>\n";
    } else if (partner > id) {
      const Pt b = where[static_cast<std::size_t>(partner)];
      body += "  <line class=\"strand\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" +
              fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\"/>\n";
    }
  }
  const double width = kCell * static_cast<double>(nf);
  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(kCell) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(kCell) + "\">\n";
  svg +=
      "  <style>.face{fill:#f4f4f4;stroke:#000;stroke-width:3}.hole{fill:#fff;stroke:#000}"
      ".strand{stroke:#c03;stroke-width:1.2;fill:none}.label{font:14px sans-serif;"
      "text-anchor:middle;dominant-baseline:middle}</style>\n";
  svg += body;
  svg += "</svg>\n";
  return svg;
}

}  // namespace swl

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "swl/surface_complex.hpp"

namespace swl {

using Rational = boost::rational<long long>;

/// Marked point on a polygon side. The side is named by the dart occupying
/// it; slot 0 lies nearer the tail of that dart, slot 1 nearer its head.
struct MarkedPoint {
  Dart side;
  int slot = 0;
  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// Which endpoint convention odd polygons use. `standard` sends slot 1 of side
/// i to side i + ceil(m/2) and slot 2 to side i + floor(m/2) (1-based slots);
/// `mirrored` swaps the two targets.
enum class SlotConvention { standard, mirrored };

#if defined(SWL_MIRROR_SLOTS)
inline constexpr SlotConvention kDefaultSlotConvention = SlotConvention::mirrored;
#else
inline constexpr SlotConvention kDefaultSlotConvention = SlotConvention::standard;
#endif

enum class GlueCase { planar, crossing };

/// The unweighted strand system lambda' as a pair of involutions on points.
/// Points 0..4n-1 are marked points (id = 2 * dart code + slot); ids from 4n
/// upward are hole anchors, one per marked point of a holed face. Every
/// strand carries weight 1/2.
class LambdaSystem {
 public:
  using PointId = std::int32_t;

  static Rational weight() { return Rational(1, 2); }

  std::size_t num_generators() const { return num_generators_; }
  std::size_t num_marked_points() const { return 4 * num_generators_; }
  std::size_t num_points() const { return intra_.size(); }
  std::size_t num_anchors() const { return num_points() - num_marked_points(); }
  bool is_anchor(PointId p) const { return static_cast<std::size_t>(p) >= num_marked_points(); }

  static PointId point_id(Dart side, int slot) { return 2 * side.code() + slot; }
  MarkedPoint point(PointId p) const {
    return MarkedPoint{Dart(static_cast<std::uint8_t>(p / 2)), p % 2};
  }

  /// Partner inside the polygon (or the hole anchor).
  PointId intra(PointId p) const { return intra_[p]; }
  /// Partner across the edge; defined on marked points only.
  PointId glue(PointId p) const { return glue_[p]; }
  GlueCase glue_case(std::size_t generator) const { return cases_[generator]; }
  SlotConvention convention() const { return convention_; }

  /// Number of strands of lambda' crossing the edge of this generator.
  std::size_t crossings_on_edge(std::size_t generator) const;

 private:
  friend LambdaSystem build_lambda(const Complex&, SlotConvention);
  std::size_t num_generators_ = 0;
  std::vector<PointId> intra_;
  std::vector<PointId> glue_;
  std::vector<GlueCase> cases_;
  SlotConvention convention_ = SlotConvention::standard;
};

LambdaSystem build_lambda(const Complex& complex,
                          SlotConvention convention = kDefaultSlotConvention);

struct LambdaComponent {
  bool closed = false;
  /// Generators whose edges the component crosses, in traversal order. Closed
  /// components are stored in their least rotation/direction, arcs in the
  /// lesser of their two directions.
  std::vector<std::size_t> crossings;
  friend auto operator<=>(const LambdaComponent&, const LambdaComponent&) = default;
};

struct ComponentCensus {
  std::size_t curves = 0;
  std::size_t arcs = 0;
  std::vector<LambdaComponent> components;  // sorted
  std::size_t total_crossings() const;
};

ComponentCensus trace_components(const LambdaSystem& lambda);

/// The component through one marked point, in canonical form.
LambdaComponent trace_component_from(const LambdaSystem& lambda, LambdaSystem::PointId start);

/// Weighted crossings of the drawn word with lambda: 1/2 for each strand
/// crossing each letter's edge.
Rational raw_crossing_count(const Word& word, const LambdaSystem& lambda);

nlohmann::ordered_json census_to_json(const Complex& complex, const ComponentCensus& census);

std::string emit_svg(const Complex& complex, const LambdaSystem& lambda);

}  // namespace swl

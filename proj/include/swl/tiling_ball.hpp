#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "swl/surface_complex.hpp"
#include "swl/word.hpp"

namespace swl {

inline constexpr std::size_t kDefaultVertexCap = 5'000'000;

/// A fragment of the universal-cover tiling, grown by corner completion.
/// Vertices are lifts of the base point; vertex v has one slot per dart, and
/// slot d holds the vertex reached by following d. Coincident vertices are
/// merged with union-find, so ids handed out earlier stay valid through
/// find(). Holed faces are never filled.
class TilingBall {
 public:
  using VertexId = std::int32_t;
  static constexpr VertexId kNone = -1;

  struct FaceRecord {
    std::size_t face = 0;    // face id in the complex
    VertexId corner0 = 0;    // vertex where the boundary reading starts
    int layer = 0;           // 0 when not placed by layered growth
  };

  explicit TilingBall(const Complex& complex, std::size_t vertex_cap = kDefaultVertexCap);

  const Complex& complex() const { return *complex_; }
  VertexId origin() const { return find(0); }
  VertexId find(VertexId v) const;
  /// Live (representative) vertex ids in increasing order.
  std::vector<VertexId> vertices() const;
  std::size_t num_vertices() const { return live_; }
  std::size_t num_edges() const;
  std::size_t vertex_cap() const { return cap_; }

  VertexId neighbour(VertexId v, Dart d) const;
  bool is_complete(VertexId v) const { return complete_[find(v)] != 0; }
  std::size_t degree(VertexId v) const;

  /// Fills every disk corner at v and then every remaining empty slot.
  void complete_vertex(VertexId v);
  /// Completes the corner between slot s and its rotation successor.
  void complete_corner(VertexId v, Dart s);

  /// Completes every vertex within graph distance radius - 1 of the origin,
  /// until nothing changes. Afterwards the Cayley ball of that radius is
  /// present with correct distances.
  void grow_to_depth(std::size_t radius);
  /// Layered growth: layer 1 is the set of faces at the origin, layer i the
  /// faces meeting a vertex of layers < i.
  void grow_layers(std::size_t layers);
  std::size_t num_layers() const { return layers_grown_; }

  /// Endpoint of the lift of the word starting at start. Missing edges are
  /// created by completing vertices along the way.
  VertexId trace_path(const Word& word, VertexId start);
  VertexId trace_path(const Word& word) { return trace_path(word, origin()); }

  /// Breadth-first distances from v over existing edges, up to max_depth.
  /// Entries for unreached vertices are -1. Indexed by raw vertex id.
  std::vector<int> distances_from(VertexId v, int max_depth = INT32_MAX) const;

  /// Closed disk faces, one record per face of the cover.
  std::vector<FaceRecord> faces() const;
  /// Corner vertices of a face record, in boundary order.
  std::vector<VertexId> face_vertices(const FaceRecord& f) const;

  nlohmann::ordered_json stats_json() const;
  std::string to_dot() const;

 private:
  VertexId new_vertex();
  VertexId slot(VertexId v, Dart d) const;
  void link(VertexId a, Dart d, VertexId b);
  void merge(VertexId a, VertexId b);
  void settle();
  void record_face(VertexId v, Dart s, std::size_t face, std::size_t pos);

  const Complex* complex_;
  std::size_t cap_;
  std::size_t darts_;
  std::vector<std::uint8_t> rot_next_;
  // Position of each dart within its face.
  std::vector<SideRef> side_;
  std::vector<VertexId> slots_;  // darts_ entries per vertex, raw ids
  mutable std::vector<VertexId> parent_;
  std::vector<std::uint8_t> complete_;
  std::size_t live_ = 0;
  std::vector<std::pair<VertexId, VertexId>> pending_;
  std::vector<FaceRecord> face_log_;
  int current_layer_ = 0;
  std::size_t layers_grown_ = 0;
};

}  // namespace swl

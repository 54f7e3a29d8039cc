#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "swl/word.hpp"

namespace swl {

/// A simple generating set encoded as a one-vertex rotation system together
/// with the list of complementary regions that contain a boundary component.
struct SurfaceSpec {
  Alphabet alphabet;
  std::vector<Dart> rotation;             // cyclic order of all 2n darts
  std::vector<std::size_t> holed_faces;   // sorted, unique

  std::size_t num_generators() const { return alphabet.num_generators(); }
  std::size_t num_darts() const { return 2 * num_generators(); }

  friend bool operator==(const SurfaceSpec& a, const SurfaceSpec& b) {
    return a.alphabet.names() == b.alphabet.names() && a.rotation == b.rotation &&
           a.holed_faces == b.holed_faces;
  }
};

SurfaceSpec parse_surface_spec(std::string_view text);
std::string to_spec_text(const SurfaceSpec& spec);

enum class FaceKind { disk, holed };

struct Face {
  std::size_t id = 0;
  std::vector<Dart> sides;  // cyclic, starting at the face's smallest dart
  FaceKind kind = FaceKind::disk;

  std::size_t size() const { return sides.size(); }
  bool is_disk() const { return kind == FaceKind::disk; }
  friend bool operator==(const Face&, const Face&) = default;
};

/// Where a dart sits as a polygon side.
struct SideRef {
  std::size_t face = 0;
  std::size_t position = 0;
  friend bool operator==(const SideRef&, const SideRef&) = default;
};

/// The surface cut along the generators: faces traced from the rotation
/// system, with genus and boundary count. Immutable once built.
class Complex {
 public:
  const SurfaceSpec& spec() const { return spec_; }
  const Alphabet& alphabet() const { return spec_.alphabet; }
  std::size_t num_generators() const { return spec_.num_generators(); }
  std::size_t num_darts() const { return spec_.num_darts(); }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t id) const { return faces_.at(id); }
  int genus() const { return genus_; }
  int boundary_count() const { return boundary_; }
  int euler_characteristic() const { return euler_; }
  bool has_disk_faces() const;
  std::size_t num_disk_faces() const;

  Dart rotation_next(Dart d) const { return Dart(rot_next_[d.code()]); }
  Dart rotation_prev(Dart d) const { return Dart(rot_prev_[d.code()]); }
  /// Face successor: the rotation successor of the inverse dart.
  Dart face_next(Dart d) const { return rotation_next(d.inverse()); }
  const SideRef& side_of(Dart d) const { return side_of_[d.code()]; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.spec_ == b.spec_ && a.faces_ == b.faces_;
  }

 private:
  friend Complex build_complex(const SurfaceSpec& spec);
  friend Complex trace_faces(const SurfaceSpec& spec);

  SurfaceSpec spec_;
  std::vector<std::uint8_t> rot_next_;
  std::vector<std::uint8_t> rot_prev_;
  std::vector<Face> faces_;
  std::vector<SideRef> side_of_;
  int genus_ = 0;
  int boundary_ = 0;
  int euler_ = 0;
};

/// Traces faces and computes the topology, without the validity gate. The
/// holed list must already be in range.
Complex trace_faces(const SurfaceSpec& spec);

/// Traces faces and validates: holed indices in range, 3g + r > 3, and every
/// disk face has at least three sides.
Complex build_complex(const SurfaceSpec& spec);

/// Boundary word of a face, read from its smallest dart.
Word face_boundary_word(const Complex& complex, std::size_t face_id);

nlohmann::ordered_json complex_to_json(const Complex& complex);

using FacePredicate = std::function<bool(const Complex&)>;

/// Every rotation system on n generators (up to cyclic rotation of the
/// rotation sequence) and every holed subset whose complex validates and
/// satisfies the predicate. Generators are named g1..gn unless names are given.
std::vector<SurfaceSpec> search_generating_sets(std::size_t n, const FacePredicate& predicate,
                                                std::vector<std::string> names = {});

inline constexpr std::size_t kMaxSearchGenerators = 5;

}  // namespace swl

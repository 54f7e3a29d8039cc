#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "swl/surface_complex.hpp"
#include "swl/tiling_ball.hpp"
#include "swl/word.hpp"

namespace swl {

/// For surfaces with boundary the group is free. Eliminating one generator per
/// disk face along a dual spanning forest rooted at the holed faces leaves a
/// free basis; every word then has a unique freely reduced image over it.
class FreeNormalForm {
 public:
  /// Empty when the complex is closed.
  static std::optional<FreeNormalForm> build(const Complex& complex);

  std::size_t rank() const { return basis_.size(); }
  std::size_t num_darts() const { return images_.size(); }
  /// Generators of the complex that survive as basis elements, in order;
  /// basis letter i is generator basis()[i].
  const std::vector<std::size_t>& basis() const { return basis_; }
  /// Image of a dart as a word over basis letters.
  const Word& image(Dart d) const { return images_[d.code()]; }
  Word normal_form(const Word& word) const;
  /// True when the listed generators are exactly the basis, in this order,
  /// each mapping to its own basis letter.
  bool is_free_basis(const std::vector<std::size_t>& generators) const;

 private:
  std::vector<std::size_t> basis_;
  std::vector<Word> images_;
};

/// Exact word length over the generating set in a free group, by
/// meet-in-the-middle search over normal forms.
class FreeLengthOracle {
 public:
  explicit FreeLengthOracle(FreeNormalForm nf, std::size_t element_cap = kDefaultVertexCap);

  const FreeNormalForm& normal_form() const { return nf_; }
  std::size_t length(const Word& word);
  /// Length of an element given by its normal form.
  std::size_t element_length(const std::string& element);
  /// Length if the element lies in the current forward ball.
  std::optional<std::size_t> known_length(const std::string& element) const;
  /// Elements of S-length exactly k (grows the forward ball as needed).
  const std::vector<std::string>& sphere(std::size_t k);

 private:
  void grow(std::size_t radius);
  std::string step(const std::string& element, Dart d) const;

  FreeNormalForm nf_;
  std::size_t cap_;
  std::size_t elements_ = 1;
  std::vector<std::vector<std::string>> levels_;
  std::unordered_map<std::string, std::uint8_t> dist_;
};

/// Word length and conjugacy length from the universal cover: graph distance
/// in a tiling ball for closed surfaces, and free normal forms when the
/// surface has boundary.
class CoverOracle {
 public:
  explicit CoverOracle(const Complex& complex, std::size_t vertex_cap = kDefaultVertexCap);

  bool uses_normal_form() const { return free_ != nullptr; }

  std::size_t word_length(const Word& word);
  /// min over u with |u| <= radius of d(u, w u); an upper bound on the
  /// conjugacy length that is exact once radius is large enough.
  std::size_t conjugacy_length(const Word& word, std::size_t radius);

  /// Word length through the tiling ball regardless of surface type.
  std::size_t tiling_word_length(const Word& word);
  TilingBall& ball() { return *ball_; }

 private:
  void ensure_depth(std::size_t depth);
  std::size_t tiling_conjugacy_length(const Word& word, std::size_t radius);
  std::size_t free_conjugacy_length(const Word& word, std::size_t radius);

  const Complex* complex_;
  std::size_t cap_;
  std::unique_ptr<TilingBall> ball_;
  std::size_t depth_ = 0;
  std::vector<int> origin_dist_;
  std::unique_ptr<FreeLengthOracle> free_;
};

std::size_t oracle_word_length(const Complex& complex, const Word& word);
std::size_t oracle_conjugacy_length(const Complex& complex, const Word& word,
                                    std::optional<std::size_t> radius = std::nullopt);

/// Counts, for each vertex of the gallery region placed in the cover, the
/// distinct region edges at that vertex. Returns the maximum.
struct GalleryRegion;
std::size_t gallery_max_valence(const Complex& complex, const GalleryRegion& gallery);

}  // namespace swl

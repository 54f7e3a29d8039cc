#pragma once

#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "swl/lambda_system.hpp"
#include "swl/surface_complex.hpp"
#include "swl/word.hpp"

namespace swl {

/// A run of disk polygons traversed by one strand segment, with the boundary
/// cycle of their union.
struct GalleryRegion {
  std::vector<std::size_t> polygons;        // face ids in traversal order
  std::vector<Dart> exterior;               // cyclic boundary word
  std::vector<std::size_t> interior_edges;  // generators crossed between polygons
  std::vector<Dart> exits;                  // side of polygon i the strand leaves by
};

/// All gallery regions whose boundary cycle has at most max_exterior sides,
/// deduplicated by boundary cycle up to rotation and inversion unless
/// keep_duplicates is set (then one entry per strand segment).
std::vector<GalleryRegion> enumerate_galleries(const Complex& complex, const LambdaSystem& lambda,
                                               std::size_t max_exterior,
                                               bool keep_duplicates = false);

/// Replacement rules keyed by pattern. A pattern is a run of at least half of
/// some gallery boundary cycle; its replacements are the reversed
/// complementary runs. Only freely reduced patterns are kept.
struct MoveTable {
  std::size_t max_exterior = 0;
  std::size_t min_pattern = 0;
  std::size_t max_pattern = 0;
  std::size_t num_galleries = 0;
  std::unordered_map<std::string, std::vector<std::string>> rules;

  const std::vector<std::string>* find(const std::string& pattern) const {
    auto it = rules.find(pattern);
    return it == rules.end() ? nullptr : &it->second;
  }
};

MoveTable build_move_table(const Complex& complex, const LambdaSystem& lambda,
                           std::size_t max_exterior);

struct ShortestResult {
  std::size_t length = 0;
  Word witness;
};

struct CyclicShortestResult {
  std::size_t length = 0;
  CyclicWord witness;
};

/// Length-nonincreasing rewriting closure. Queries are const and safe to run
/// concurrently; the move table is grown on demand and published as an
/// immutable snapshot.
class GeodesicEngine {
 public:
  explicit GeodesicEngine(const Complex& complex,
                          SlotConvention convention = kDefaultSlotConvention);
  GeodesicEngine(const Complex& complex, LambdaSystem lambda);

  const Complex& complex() const { return complex_; }
  const LambdaSystem& lambda() const { return lambda_; }

  /// Words one move away from a freely reduced word, freely reduced.
  std::set<Word> apply_moves(const Word& word) const;
  /// Same, treating the word as cyclic; results are cyclically reduced and in
  /// least rotation.
  std::set<Word> apply_cyclic_moves(const Word& word) const;

  ShortestResult shortest_word(const Word& word) const;
  bool is_shortest(const Word& word) const;
  CyclicShortestResult cyclic_shortest(const Word& word) const;
  CyclicShortestResult cyclic_shortest(const CyclicWord& word) const {
    return cyclic_shortest(word.word());
  }

  Rational intersection_number(const Word& word) const;
  Rational intersection_number(const CyclicWord& word) const;

  /// Snapshot covering words of the given length.
  std::shared_ptr<const MoveTable> table_for(std::size_t word_length) const;

 private:
  void check_letters(const Word& word) const;

  Complex complex_;
  LambdaSystem lambda_;
  bool free_case_;
  mutable std::shared_mutex mutex_;
  mutable std::shared_ptr<const MoveTable> table_;
};

}  // namespace swl

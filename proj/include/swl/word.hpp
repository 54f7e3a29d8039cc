#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace swl {

/// An oriented edge-end at the single vertex. Generator g contributes the
/// dart 2g (the loop itself) and 2g+1 (its inverse). The numeric code is also
/// the global dart order used for canonical forms.
class Dart {
 public:
  constexpr Dart() = default;
  constexpr explicit Dart(std::uint8_t code) : code_(code) {}
  static constexpr Dart of(std::size_t generator, bool inverse) {
    return Dart(static_cast<std::uint8_t>(2 * generator + (inverse ? 1 : 0)));
  }

  constexpr std::uint8_t code() const { return code_; }
  constexpr std::size_t generator() const { return code_ >> 1; }
  constexpr bool is_inverse() const { return (code_ & 1) != 0; }
  constexpr Dart inverse() const { return Dart(code_ ^ 1); }

  friend constexpr auto operator<=>(Dart, Dart) = default;

 private:
  std::uint8_t code_ = 0;
};

/// A word in the generators, stored one byte per dart so that it can be used
/// directly as a hash key.
class Word {
 public:
  Word() = default;
  explicit Word(std::string codes) : codes_(std::move(codes)) {}
  Word(std::initializer_list<Dart> darts);
  explicit Word(const std::vector<Dart>& darts);

  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Dart operator[](std::size_t i) const {
    return Dart(static_cast<std::uint8_t>(codes_[i]));
  }
  void push_back(Dart d) { codes_.push_back(static_cast<char>(d.code())); }
  void pop_back() { codes_.pop_back(); }
  void append(const Word& other) { codes_ += other.codes_; }

  const std::string& codes() const { return codes_; }
  std::vector<Dart> darts() const;

  Word inverse() const;
  Word power(std::size_t k) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.codes_ <=> b.codes_;
  }

 private:
  std::string codes_;
};

Word concat(const Word& a, const Word& b);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& word);

/// Free reduction followed by cancellation across the wrap-around point.
Word cyclic_free_reduce(const Word& word);

/// Lexicographically least rotation.
Word least_rotation(const Word& word);

/// A word up to rotation. Always stored in its canonical (least) rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& word) : word_(least_rotation(word)) {}

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return a.word_ <=> b.word_;
  }

 private:
  Word word_;
};

/// Generator names used to read and print words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> generator_names);

  std::size_t num_generators() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  /// Name with a trailing apostrophe for inverse darts.
  std::string dart_name(Dart d) const;
  /// Returns false when the token is not a known dart.
  bool lookup_dart(std::string_view token, Dart& out) const;

  /// Whitespace-separated tokens, `'` suffix for inverses, optional `^k`
  /// (k may be negative) expanded in place.
  Word parse_word(std::string_view text) const;
  std::string format(const Word& word) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace swl

template <>
struct std::hash<swl::Word> {
  std::size_t operator()(const swl::Word& w) const noexcept {
    return std::hash<std::string>{}(w.codes());
  }
};

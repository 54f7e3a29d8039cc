#include "swl/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "swl/error.hpp"

namespace swl {

Word::Word(std::initializer_list<Dart> darts) {
  for (Dart d : darts) push_back(d);
}

Word::Word(const std::vector<Dart>& darts) {
  for (Dart d : darts) push_back(d);
}

std::vector<Dart> Word::darts() const {
  std::vector<Dart> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

Word Word::inverse() const {
  std::string out(codes_.rbegin(), codes_.rend());
  for (char& c : out) c = static_cast<char>(c ^ 1);
  return Word(std::move(out));
}

Word Word::power(std::size_t k) const {
  std::string out;
  out.reserve(codes_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += codes_;
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word free_reduce(const Word& word) {
  std::string out;
  out.reserve(word.size());
  for (char c : word.codes()) {
    if (!out.empty() && (out.back() ^ c) == 1) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return Word(std::move(out));
}

Word cyclic_free_reduce(const Word& word) {
  const std::string s = free_reduce(word).codes();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && (s[lo] ^ s[hi - 1]) == 1) {
    ++lo;
    --hi;
  }
  return Word(s.substr(lo, hi - lo));
}

Word least_rotation(const Word& word) {
  const std::string& s = word.codes();
  const std::size_t n = s.size();
  if (n <= 1) return word;
  // Booth's algorithm on the doubled string.
  const std::string t = s + s;
  std::vector<int> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const unsigned char sj = static_cast<unsigned char>(t[j]);
    int i = fail[j - k - 1];
    while (i != -1 && sj != static_cast<unsigned char>(t[k + i + 1])) {
      if (sj < static_cast<unsigned char>(t[k + i + 1])) k = j - i - 1;
      i = fail[i];
    }
    if (sj != static_cast<unsigned char>(t[k + i + 1])) {
      if (sj < static_cast<unsigned char>(t[k])) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return Word(t.substr(k, n));
}

Alphabet::Alphabet(std::vector<std::string> generator_names)
    : names_(std::move(generator_names)) {}

std::string Alphabet::dart_name(Dart d) const {
  std::string name = d.generator() < names_.size()
                         ? names_[d.generator()]
                         : "g" + std::to_string(d.generator());
  if (d.is_inverse()) name += '\'';
  return name;
}

bool Alphabet::lookup_dart(std::string_view token, Dart& out) const {
  bool inverse = false;
  if (!token.empty() && token.back() == '\'') {
    inverse = true;
    token.remove_suffix(1);
  }
  for (std::size_t g = 0; g < names_.size(); ++g) {
    if (names_[g] == token) {
      out = Dart::of(g, inverse);
      return true;
    }
  }
  return false;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string_view body = token;
    long exponent = 1;
    if (const auto caret = body.find('^'); caret != std::string_view::npos) {
      std::string_view digits = body.substr(caret + 1);
      body = body.substr(0, caret);
      const auto* first = digits.data();
      const auto* last = digits.data() + digits.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (digits.empty() || ec != std::errc{} || ptr != last) {
        throw Error(ErrorKind::malformed_word, "bad exponent in token '" + token + "'");
      }
    }
    if (body.empty()) {
      throw Error(ErrorKind::malformed_word, "empty generator in token '" + token + "'");
    }
    Dart d;
    if (!lookup_dart(body, d)) {
      throw Error(ErrorKind::unknown_generator, "unknown generator '" + std::string(body) + "'");
    }
    if (exponent < 0) {
      d = d.inverse();
      exponent = -exponent;
    }
    for (long i = 0; i < exponent; ++i) out.push_back(d);
  }
  return out;
}

std::string Alphabet::format(const Word& word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += dart_name(word[i]);
  }
  return out;
}

}  // namespace swl

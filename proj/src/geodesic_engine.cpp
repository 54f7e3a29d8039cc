#include "swl/geodesic_engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "swl/error.hpp"

namespace swl {

namespace {

struct Entry {
  std::size_t polygon;   // index into the gallery's polygon list
  std::size_t position;  // side position in that face
};

Word cycle_key(const std::vector<Dart>& cycle) {
  const Word w(cycle);
  return std::min(least_rotation(w), least_rotation(w.inverse()));
}

bool is_freely_reduced(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i - 1] ^ s[i]) == 1) return false;
  }
  return true;
}

}  // namespace

std::vector<GalleryRegion> enumerate_galleries(const Complex& complex, const LambdaSystem& lambda,
                                               std::size_t max_exterior, bool keep_duplicates) {
  std::vector<GalleryRegion> out;
  std::set<Word> seen;
  auto record = [&](const GalleryRegion& g) {
    if (keep_duplicates || seen.insert(cycle_key(g.exterior)).second) out.push_back(g);
  };

  for (std::size_t s = 0; s < lambda.num_marked_points(); ++s) {
    auto p = static_cast<LambdaSystem::PointId>(s);
    const SideRef start = complex.side_of(lambda.point(p).side);
    const Face& first = complex.face(start.face);
    if (!first.is_disk() || first.size() > max_exterior) continue;

    GalleryRegion g;
    g.polygons.push_back(first.id);
    std::vector<Entry> cycle;
    for (std::size_t i = 0; i < first.size(); ++i) cycle.push_back({0, i});
    auto darts_of = [&](const std::vector<Entry>& c) {
      std::vector<Dart> d;
      d.reserve(c.size());
      for (const Entry& e : c) d.push_back(complex.face(g.polygons[e.polygon]).sides[e.position]);
      return d;
    };
    g.exterior = darts_of(cycle);
    record(g);

    while (true) {
      const LambdaSystem::PointId exit = lambda.intra(p);
      const Dart exit_side = lambda.point(exit).side;
      const SideRef exit_ref = complex.side_of(exit_side);
      const LambdaSystem::PointId enter = lambda.glue(exit);
      const SideRef enter_ref = complex.side_of(lambda.point(enter).side);
      const Face& next = complex.face(enter_ref.face);
      if (!next.is_disk()) break;
      if (cycle.size() + next.size() - 2 > max_exterior) break;

      const std::size_t cur = g.polygons.size() - 1;
      auto at = std::find_if(cycle.begin(), cycle.end(), [&](const Entry& e) {
        return e.polygon == cur && e.position == exit_ref.position;
      });
      std::vector<Entry> splice;
      for (std::size_t k = 1; k < next.size(); ++k) {
        splice.push_back({cur + 1, (enter_ref.position + k) % next.size()});
      }
      at = cycle.erase(at);
      cycle.insert(at, splice.begin(), splice.end());
      g.polygons.push_back(next.id);
      g.interior_edges.push_back(exit_side.generator());
      g.exits.push_back(exit_side);
      g.exterior = darts_of(cycle);
      record(g);
      p = enter;
    }
  }
  return out;
}

MoveTable build_move_table(const Complex& complex, const LambdaSystem& lambda,
                           std::size_t max_exterior) {
  MoveTable table;
  table.max_exterior = max_exterior;
  // A pattern longer than half the word bound can never match a word that
  // asked for this bound.
  const std::size_t longest_useful = max_exterior >= 2 ? (max_exterior - 2) / 2 : 0;
  const auto galleries = enumerate_galleries(complex, lambda, max_exterior);
  table.num_galleries = galleries.size();
  table.min_pattern = SIZE_MAX;
  for (const auto& g : galleries) {
    const Word fwd(g.exterior);
    for (const Word& c : {fwd, fwd.inverse()}) {
      const std::string& s = c.codes();
      const std::size_t len = s.size();
      const std::string doubled = s + s;
      for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t k = (len + 1) / 2; k <= len && k <= longest_useful; ++k) {
          std::string pattern = doubled.substr(i, k);
          if (!is_freely_reduced(pattern)) continue;
          const std::string rest = doubled.substr(i + k, len - k);
          std::string replacement = Word(rest).inverse().codes();
          auto& reps = table.rules[pattern];
          if (std::find(reps.begin(), reps.end(), replacement) == reps.end()) {
            reps.push_back(std::move(replacement));
          }
          table.min_pattern = std::min(table.min_pattern, k);
          table.max_pattern = std::max(table.max_pattern, k);
        }
      }
    }
  }
  if (table.rules.empty()) table.min_pattern = 0;
  for (auto& [pattern, reps] : table.rules) std::sort(reps.begin(), reps.end());
  return table;
}

GeodesicEngine::GeodesicEngine(const Complex& complex, SlotConvention convention)
    : GeodesicEngine(complex, build_lambda(complex, convention)) {}

GeodesicEngine::GeodesicEngine(const Complex& complex, LambdaSystem lambda)
    : complex_(complex), lambda_(std::move(lambda)), free_case_(!complex.has_disk_faces()) {}

std::shared_ptr<const MoveTable> GeodesicEngine::table_for(std::size_t word_length) const {
  const std::size_t needed = 2 * word_length + 2;
  {
    std::shared_lock lock(mutex_);
    if (table_ && table_->max_exterior >= needed) return table_;
  }
  std::unique_lock lock(mutex_);
  if (table_ && table_->max_exterior >= needed) return table_;
  std::size_t bound = needed;
  if (table_) bound = std::max(bound, table_->max_exterior + table_->max_exterior / 2);
  table_ = std::make_shared<const MoveTable>(build_move_table(complex_, lambda_, bound));
  return table_;
}

void GeodesicEngine::check_letters(const Word& word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].generator() >= complex_.num_generators()) {
      throw Error(ErrorKind::unknown_generator, "word uses a generator outside the complex");
    }
  }
}

std::set<Word> GeodesicEngine::apply_moves(const Word& word) const {
  std::set<Word> out;
  if (free_case_ || word.empty()) return out;
  const auto table = table_for(word.size());
  const std::string& s = word.codes();
  std::string key;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t k = table->min_pattern; k <= table->max_pattern && i + k <= s.size(); ++k) {
      key.assign(s, i, k);
      const auto* reps = table->find(key);
      if (!reps) continue;
      for (const std::string& r : *reps) {
        out.insert(free_reduce(Word(s.substr(0, i) + r + s.substr(i + k))));
      }
    }
  }
  return out;
}

std::set<Word> GeodesicEngine::apply_cyclic_moves(const Word& word) const {
  std::set<Word> out;
  if (free_case_ || word.empty()) return out;
  const auto table = table_for(word.size());
  const std::string& s = word.codes();
  const std::size_t n = s.size();
  const std::string doubled = s + s;
  std::string key;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = table->min_pattern; k <= table->max_pattern && k <= n; ++k) {
      key.assign(doubled, i, k);
      const auto* reps = table->find(key);
      if (!reps) continue;
      const std::string rest = doubled.substr(i + k, n - k);
      for (const std::string& r : *reps) {
        out.insert(least_rotation(cyclic_free_reduce(Word(r + rest))));
      }
    }
  }
  return out;
}

namespace {

// Breadth-first closure over equal-length neighbours, restarting whenever a
// strictly shorter word appears. Returns the final equal-length class.
template <class Neighbours>
std::vector<Word> closure(Word current, Neighbours&& neighbours) {
  while (true) {
    std::unordered_set<Word> visited{current};
    std::deque<Word> frontier{current};
    bool restarted = false;
    while (!frontier.empty() && !restarted) {
      const Word w = std::move(frontier.front());
      frontier.pop_front();
      for (const Word& next : neighbours(w)) {
        if (next.size() < current.size()) {
          current = next;
          restarted = true;
          break;
        }
        if (visited.insert(next).second) frontier.push_back(next);
      }
    }
    if (!restarted) return {visited.begin(), visited.end()};
  }
}

}  // namespace

ShortestResult GeodesicEngine::shortest_word(const Word& word) const {
  check_letters(word);
  Word start = free_reduce(word);
  if (free_case_ || start.empty()) return {start.size(), start};
  auto cls = closure(std::move(start), [this](const Word& w) { return apply_moves(w); });
  const Word best = *std::min_element(cls.begin(), cls.end());
  return {best.size(), best};
}

bool GeodesicEngine::is_shortest(const Word& word) const {
  return shortest_word(word).length == free_reduce(word).size();
}

CyclicShortestResult GeodesicEngine::cyclic_shortest(const Word& word) const {
  check_letters(word);
  Word start = least_rotation(cyclic_free_reduce(word));
  if (free_case_ || start.empty()) return {start.size(), CyclicWord(start)};
  auto cls = closure(std::move(start), [this](const Word& w) { return apply_cyclic_moves(w); });
  const Word best = *std::min_element(cls.begin(), cls.end());
  return {best.size(), CyclicWord(best)};
}

Rational GeodesicEngine::intersection_number(const Word& word) const {
  return raw_crossing_count(shortest_word(word).witness, lambda_);
}

Rational GeodesicEngine::intersection_number(const CyclicWord& word) const {
  return raw_crossing_count(cyclic_shortest(word).witness.word(), lambda_);
}

}  // namespace swl

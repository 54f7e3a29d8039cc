#include "swl/cover_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "swl/error.hpp"
#include "swl/geodesic_engine.hpp"

namespace swl {

namespace {

// Appends a dart-coded word to a freely reduced element, cancelling as it goes.
void append_reduced(std::string& element, const std::string& codes) {
  for (char c : codes) {
    if (!element.empty() && (element.back() ^ c) == 1) {
      element.pop_back();
    } else {
      element.push_back(c);
    }
  }
}

}  // namespace

std::optional<FreeNormalForm> FreeNormalForm::build(const Complex& complex) {
  if (complex.boundary_count() == 0) return std::nullopt;
  const std::size_t n = complex.num_generators();
  const std::size_t nf = complex.faces().size();
  auto face_of = [&](std::size_t g, bool inv) { return complex.side_of(Dart::of(g, inv)).face; };

  std::vector<bool> reached(nf, false);
  std::vector<std::size_t> parent_edge(nf, SIZE_MAX);
  std::deque<std::size_t> queue;
  for (const Face& f : complex.faces()) {
    if (!f.is_disk()) {
      reached[f.id] = true;
      queue.push_back(f.id);
    }
  }
  std::vector<std::size_t> order;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t g = n; g-- > 0;) {
      const std::size_t a = face_of(g, false);
      const std::size_t b = face_of(g, true);
      if (a == b || (a != f && b != f)) continue;
      const std::size_t h = a == f ? b : a;
      if (reached[h]) continue;
      reached[h] = true;
      parent_edge[h] = g;
      order.push_back(h);
      queue.push_back(h);
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw Error(ErrorKind::degenerate_surface, "dual graph does not reach every face");
  }

  FreeNormalForm out;
  std::vector<bool> eliminated(n, false);
  for (std::size_t f : order) eliminated[parent_edge[f]] = true;
  out.images_.assign(2 * n, Word());
  std::vector<bool> known(n, false);
  for (std::size_t g = 0; g < n; ++g) {
    if (eliminated[g]) continue;
    const Dart letter = Dart::of(out.basis_.size(), false);
    out.basis_.push_back(g);
    out.images_[2 * g] = Word{letter};
    out.images_[2 * g + 1] = Word{letter.inverse()};
    known[g] = true;
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Face& face = complex.face(*it);
    const std::size_t g = parent_edge[*it];
    const std::size_t m = face.size();
    std::size_t p = 0;
    while (face.sides[p].generator() != g) ++p;
    std::string rest;
    for (std::size_t k = 1; k < m; ++k) {
      const Dart d = face.sides[(p + k) % m];
      if (!known[d.generator()]) {
        throw Error(ErrorKind::degenerate_surface, "elimination order broke down");
      }
      append_reduced(rest, out.images_[d.code()].codes());
    }
    // d_p * rest = 1.
    const Word value = face.sides[p].is_inverse() ? Word(rest) : Word(rest).inverse();
    out.images_[2 * g] = value;
    out.images_[2 * g + 1] = value.inverse();
    known[g] = true;
  }
  return out;
}

Word FreeNormalForm::normal_form(const Word& word) const {
  std::string element;
  for (std::size_t i = 0; i < word.size(); ++i) append_reduced(element, images_[word[i].code()].codes());
  return Word(std::move(element));
}

bool FreeNormalForm::is_free_basis(const std::vector<std::size_t>& generators) const {
  return basis_ == generators;
}

FreeLengthOracle::FreeLengthOracle(FreeNormalForm nf, std::size_t element_cap)
    : nf_(std::move(nf)), cap_(element_cap) {
  levels_.push_back({std::string()});
  dist_.emplace(std::string(), 0);
}

std::string FreeLengthOracle::step(const std::string& element, Dart d) const {
  std::string out = element;
  append_reduced(out, nf_.image(d).codes());
  return out;
}

void FreeLengthOracle::grow(std::size_t radius) {
  while (levels_.size() <= radius) {
    if (levels_.size() > 250) throw Error(ErrorKind::too_large, "length ball radius too large");
    std::vector<std::string> next;
    const auto k = static_cast<std::uint8_t>(levels_.size());
    for (const std::string& e : levels_.back()) {
      for (std::size_t c = 0; c < nf_.num_darts(); ++c) {
        std::string x = step(e, Dart(static_cast<std::uint8_t>(c)));
        if (dist_.contains(x)) continue;
        if (++elements_ > cap_) {
          // Keep the ball whole: drop the partial level.
          for (const std::string& y : next) dist_.erase(y);
          elements_ -= next.size() + 1;
          throw Error(ErrorKind::vertex_cap_exceeded,
                      "length ball exceeded the cap of " + std::to_string(cap_));
        }
        dist_.emplace(x, k);
        next.push_back(std::move(x));
      }
    }
    levels_.push_back(std::move(next));
  }
}

std::optional<std::size_t> FreeLengthOracle::known_length(const std::string& element) const {
  if (auto it = dist_.find(element); it != dist_.end()) return it->second;
  return std::nullopt;
}

std::size_t FreeLengthOracle::element_length(const std::string& element) {
  if (auto it = dist_.find(element); it != dist_.end()) return it->second;
  std::unordered_set<std::string> seen{element};
  std::vector<std::string> level{element};
  for (std::size_t j = 1;; ++j) {
    std::vector<std::string> next;
    std::size_t best = SIZE_MAX;
    for (const std::string& y : level) {
      for (std::size_t c = 0; c < nf_.num_darts(); ++c) {
        std::string x = step(y, Dart(static_cast<std::uint8_t>(c)));
        if (!seen.insert(x).second) continue;
        if (seen.size() > cap_) {
          throw Error(ErrorKind::vertex_cap_exceeded, "backward search exceeded the cap");
        }
        if (auto it = dist_.find(x); it != dist_.end()) best = std::min<std::size_t>(best, j + it->second);
        next.push_back(std::move(x));
      }
    }
    // Any geodesic longer than the forward radius meets the forward ball's
    // outer sphere first at this depth.
    if (best != SIZE_MAX) return best;
    level = std::move(next);
  }
}

std::size_t FreeLengthOracle::length(const Word& word) {
  const std::size_t len = free_reduce(word).size();
  const std::size_t want = (2 * len + 2) / 3;
  try {
    grow(want);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::vertex_cap_exceeded) throw;
  }
  return element_length(nf_.normal_form(word).codes());
}

const std::vector<std::string>& FreeLengthOracle::sphere(std::size_t k) {
  grow(k);
  return levels_[k];
}

CoverOracle::CoverOracle(const Complex& complex, std::size_t vertex_cap)
    : complex_(&complex), cap_(vertex_cap) {
  if (auto nf = FreeNormalForm::build(complex)) {
    free_ = std::make_unique<FreeLengthOracle>(std::move(*nf), vertex_cap);
  }
}

void CoverOracle::ensure_depth(std::size_t depth) {
  if (!ball_) ball_ = std::make_unique<TilingBall>(*complex_, cap_);
  if (depth_ < depth || origin_dist_.empty()) {
    ball_->grow_to_depth(std::max(depth, depth_));
    depth_ = std::max(depth_, depth);
    origin_dist_ = ball_->distances_from(ball_->origin());
  }
}

namespace {

// Distance between two vertices over existing edges by bidirectional BFS.
// Whole levels are expanded so the first meeting gives the exact value.
std::size_t graph_distance(const TilingBall& ball, TilingBall::VertexId a, TilingBall::VertexId b) {
  using V = TilingBall::VertexId;
  if (a == b) return 0;
  std::unordered_map<V, int> da{{a, 0}}, db{{b, 0}};
  std::vector<V> fa{a}, fb{b};
  const std::size_t darts = ball.complex().num_darts();
  for (bool from_a = true; !fa.empty() && !fb.empty(); from_a = !from_a) {
    auto& frontier = from_a ? fa : fb;
    auto& mine = from_a ? da : db;
    auto& other = from_a ? db : da;
    std::vector<V> next;
    int best = INT32_MAX;
    for (V y : frontier) {
      const int dy = mine[y];
      for (std::size_t c = 0; c < darts; ++c) {
        const V z = ball.neighbour(y, Dart(static_cast<std::uint8_t>(c)));
        if (z == TilingBall::kNone || !mine.emplace(z, dy + 1).second) continue;
        if (auto it = other.find(z); it != other.end()) best = std::min(best, dy + 1 + it->second);
        next.push_back(z);
      }
    }
    if (best != INT32_MAX) return static_cast<std::size_t>(best);
    frontier = std::move(next);
  }
  throw Error(ErrorKind::vertex_cap_exceeded, "vertices are not connected in the ball");
}

}  // namespace

std::size_t CoverOracle::tiling_word_length(const Word& word) {
  const Word w = free_reduce(word);
  const std::size_t len = w.size();
  if (ball_ && depth_ >= len) {
    const auto end = ball_->trace_path(w);
    if (static_cast<std::size_t>(end) >= origin_dist_.size() || origin_dist_[end] < 0) {
      origin_dist_ = ball_->distances_from(ball_->origin());
    }
    return static_cast<std::size_t>(origin_dist_[end]);
  }
  // d(1, w) = d(prefix^-1, suffix). Inside a ball of depth D every path that
  // reaches depth D from these two points has length at least
  // 2D - |left| - |right|, so a shorter distance found in the ball is exact.
  Word prefix;
  Word suffix;
  for (std::size_t i = 0; i < len; ++i) (i < len / 2 ? prefix : suffix).push_back(w[i]);
  for (std::size_t depth = std::max(depth_, len - len / 2);; ++depth) {
    ensure_depth(depth);
    const auto left = ball_->trace_path(prefix.inverse());
    const auto right = ball_->trace_path(suffix);
    const std::size_t d = graph_distance(*ball_, left, right);
    const auto dl = static_cast<std::size_t>(origin_dist_[left]);
    const auto dr = static_cast<std::size_t>(origin_dist_[right]);
    if (d + dl + dr <= 2 * depth_ || depth_ >= len) return d;
  }
}

std::size_t CoverOracle::word_length(const Word& word) {
  if (free_) return free_->length(word);
  return tiling_word_length(word);
}

std::size_t CoverOracle::conjugacy_length(const Word& word, std::size_t radius) {
  if (radius == 0) throw Error(ErrorKind::too_large, "conjugacy radius must be at least 1");
  if (free_) return free_conjugacy_length(word, radius);
  return tiling_conjugacy_length(word, radius);
}

std::size_t CoverOracle::free_conjugacy_length(const Word& word, std::size_t radius) {
  std::size_t best = free_->length(word);
  if (best == 0) return 0;
  const std::string w = free_->normal_form().normal_form(word).codes();
  free_->sphere(std::max(radius, best - 1));
  for (std::size_t k = 0; k <= radius && best > 0; ++k) {
    for (const std::string& u : free_->sphere(k)) {
      std::string x = Word(u).inverse().codes();
      append_reduced(x, w);
      append_reduced(x, u);
      if (auto len = free_->known_length(x); len && *len < best) best = *len;
      if (best == 0) break;
    }
  }
  return best;
}

namespace {

std::unordered_map<TilingBall::VertexId, int> bounded_distances(const TilingBall& ball,
                                                                TilingBall::VertexId from,
                                                                int limit) {
  std::unordered_map<TilingBall::VertexId, int> dist{{from, 0}};
  std::deque<TilingBall::VertexId> queue{from};
  const std::size_t darts = ball.complex().num_darts();
  while (!queue.empty()) {
    const auto y = queue.front();
    queue.pop_front();
    const int dy = dist[y];
    if (dy >= limit) continue;
    for (std::size_t c = 0; c < darts; ++c) {
      const auto z = ball.neighbour(y, Dart(static_cast<std::uint8_t>(c)));
      if (z != TilingBall::kNone && dist.emplace(z, dy + 1).second) queue.push_back(z);
    }
  }
  return dist;
}

}  // namespace

std::size_t CoverOracle::tiling_conjugacy_length(const Word& word, std::size_t radius) {
  const Word w = free_reduce(word);
  std::size_t best = tiling_word_length(w);
  // Only the identity has length 0, and conjugates of other elements are
  // never the identity.
  if (best <= 1) return best;
  const std::size_t len = w.size();
  const std::size_t half = len / 2;
  Word prefix;
  Word suffix;
  for (std::size_t i = 0; i < len; ++i) (i < half ? prefix : suffix).push_back(w[i]);

  // Work in the frame translated by the prefix: u becomes prefix^-1 u and
  // w u becomes suffix u. Every vertex touched below then lies within
  // radius + len - 1 of the origin.
  ensure_depth(radius + len - 1);
  TilingBall& ball = *ball_;
  using V = TilingBall::VertexId;
  const V left = ball.trace_path(prefix.inverse());
  const V right = ball.trace_path(suffix);

  std::unordered_map<V, V> image{{left, right}};
  std::unordered_map<V, int> depth{{left, 0}};
  std::deque<V> queue{left};
  const std::size_t darts = complex_->num_darts();
  while (!queue.empty() && best > 1) {
    const V u = queue.front();
    queue.pop_front();
    const V x = image[u];
    const int k = static_cast<int>(best) - 1;
    const auto from_u = bounded_distances(ball, u, (k + 1) / 2);
    const auto from_x = bounded_distances(ball, x, k / 2);
    for (const auto& [v, d] : from_u) {
      if (auto it = from_x.find(v); it != from_x.end()) {
        best = std::min(best, static_cast<std::size_t>(d + it->second));
      }
    }
    if (depth[u] >= static_cast<int>(radius)) continue;
    for (std::size_t c = 0; c < darts; ++c) {
      const Dart d(static_cast<std::uint8_t>(c));
      const V nu = ball.neighbour(u, d);
      if (nu == TilingBall::kNone || depth.contains(nu)) continue;
      depth[nu] = depth[u] + 1;
      image[nu] = ball.neighbour(x, d);
      queue.push_back(nu);
    }
  }
  return best;
}

std::size_t oracle_word_length(const Complex& complex, const Word& word) {
  CoverOracle oracle(complex);
  return oracle.word_length(word);
}

std::size_t oracle_conjugacy_length(const Complex& complex, const Word& word,
                                    std::optional<std::size_t> radius) {
  CoverOracle oracle(complex);
  return oracle.conjugacy_length(word, radius.value_or(free_reduce(word).size() + 4));
}

std::size_t gallery_max_valence(const Complex& complex, const GalleryRegion& gallery) {
  using V = TilingBall::VertexId;
  TilingBall ball(complex);
  std::vector<std::vector<V>> corners;
  auto place = [&](std::size_t face_id, std::size_t position, V at) {
    const Face& face = complex.face(face_id);
    const std::size_t m = face.size();
    ball.complete_corner(at, complex.rotation_prev(face.sides[position]));
    std::vector<V> c(m);
    V v = ball.find(at);
    for (std::size_t k = 0; k < m; ++k) {
      c[(position + k) % m] = v;
      v = ball.neighbour(v, face.sides[(position + k) % m]);
    }
    corners.push_back(std::move(c));
  };
  place(gallery.polygons.front(), 0, ball.origin());
  for (std::size_t t = 0; t + 1 < gallery.polygons.size(); ++t) {
    const Dart exit = gallery.exits[t];
    const SideRef out = complex.side_of(exit);
    const SideRef in = complex.side_of(exit.inverse());
    const std::size_t m = complex.face(gallery.polygons[t]).size();
    place(gallery.polygons[t + 1], in.position, corners[t][(out.position + 1) % m]);
  }
  // Complete the stars around the region so that every coincidence between
  // region polygons is resolved.
  std::set<V> region;
  for (const auto& c : corners) region.insert(c.begin(), c.end());
  std::set<V> ring;
  for (V v : region) {
    ball.complete_vertex(v);
  }
  for (V v : region) {
    for (std::size_t c = 0; c < complex.num_darts(); ++c) {
      const V w = ball.neighbour(v, Dart(static_cast<std::uint8_t>(c)));
      if (w != TilingBall::kNone) ring.insert(w);
    }
  }
  for (V v : ring) ball.complete_vertex(v);

  std::map<V, std::set<std::pair<V, int>>> incident;
  for (std::size_t t = 0; t < corners.size(); ++t) {
    const Face& face = complex.face(gallery.polygons[t]);
    const std::size_t m = face.size();
    for (std::size_t k = 0; k < m; ++k) {
      const V a = ball.find(corners[t][k]);
      const V b = ball.find(corners[t][(k + 1) % m]);
      const Dart d = face.sides[k];
      const auto key = d.is_inverse() ? std::make_pair(b, int(d.inverse().code()))
                                      : std::make_pair(a, int(d.code()));
      incident[a].insert(key);
      incident[b].insert(key);
    }
  }
  std::size_t worst = 0;
  for (const auto& [v, edges] : incident) worst = std::max(worst, edges.size());
  return worst;
}

}  // namespace swl

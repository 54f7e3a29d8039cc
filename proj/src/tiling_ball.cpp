#include "swl/tiling_ball.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "swl/error.hpp"

namespace swl {

TilingBall::TilingBall(const Complex& complex, std::size_t vertex_cap)
    : complex_(&complex), cap_(vertex_cap), darts_(complex.num_darts()) {
  rot_next_.resize(darts_);
  side_.resize(darts_);
  for (std::size_t c = 0; c < darts_; ++c) {
    const Dart d(static_cast<std::uint8_t>(c));
    rot_next_[c] = complex.rotation_next(d).code();
    side_[c] = complex.side_of(d);
  }
  new_vertex();
}

TilingBall::VertexId TilingBall::find(VertexId v) const {
  VertexId root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    const VertexId next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

TilingBall::VertexId TilingBall::new_vertex() {
  if (live_ >= cap_) {
    throw Error(ErrorKind::vertex_cap_exceeded,
                "tiling ball exceeded the vertex cap of " + std::to_string(cap_));
  }
  const auto id = static_cast<VertexId>(parent_.size());
  parent_.push_back(id);
  complete_.push_back(0);
  slots_.insert(slots_.end(), darts_, kNone);
  ++live_;
  return id;
}

TilingBall::VertexId TilingBall::slot(VertexId v, Dart d) const {
  const VertexId raw = slots_[static_cast<std::size_t>(v) * darts_ + d.code()];
  return raw == kNone ? kNone : find(raw);
}

TilingBall::VertexId TilingBall::neighbour(VertexId v, Dart d) const { return slot(find(v), d); }

std::size_t TilingBall::degree(VertexId v) const {
  v = find(v);
  std::size_t deg = 0;
  for (std::size_t c = 0; c < darts_; ++c) {
    if (slot(v, Dart(static_cast<std::uint8_t>(c))) != kNone) ++deg;
  }
  return deg;
}

void TilingBall::link(VertexId a, Dart d, VertexId b) {
  a = find(a);
  b = find(b);
  const VertexId x = slot(a, d);
  if (x == kNone) {
    slots_[static_cast<std::size_t>(a) * darts_ + d.code()] = b;
  } else if (x != b) {
    pending_.emplace_back(x, b);
  }
  const Dart back = d.inverse();
  const VertexId y = slot(b, back);
  if (y == kNone) {
    slots_[static_cast<std::size_t>(b) * darts_ + back.code()] = a;
  } else if (y != a) {
    pending_.emplace_back(y, a);
  }
}

void TilingBall::merge(VertexId a, VertexId b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  const VertexId keep = std::min(a, b);
  const VertexId gone = std::max(a, b);
  parent_[gone] = keep;
  --live_;
  complete_[keep] = complete_[keep] | complete_[gone];
  for (std::size_t c = 0; c < darts_; ++c) {
    VertexId& raw = slots_[static_cast<std::size_t>(gone) * darts_ + c];
    if (raw == kNone) continue;
    const VertexId t = find(raw);
    raw = kNone;
    const Dart d(static_cast<std::uint8_t>(c));
    const VertexId cur = slot(keep, d);
    if (cur == kNone) {
      slots_[static_cast<std::size_t>(keep) * darts_ + c] = t;
    } else if (cur != t) {
      pending_.emplace_back(cur, t);
    }
  }
}

void TilingBall::settle() {
  while (!pending_.empty()) {
    const auto [x, y] = pending_.back();
    pending_.pop_back();
    merge(x, y);
  }
}

void TilingBall::record_face(VertexId v, Dart s, std::size_t face, std::size_t pos) {
  (void)s;
  const auto& sides = complex_->face(face).sides;
  VertexId b = find(v);
  for (std::size_t k = pos; k > 0; --k) b = slot(b, sides[k - 1].inverse());
  face_log_.push_back({face, b, current_layer_});
}

void TilingBall::complete_corner(VertexId v, Dart s) {
  v = find(v);
  const SideRef ref = side_[rot_next_[s.code()]];
  const Face& face = complex_->face(ref.face);
  if (!face.is_disk()) return;
  const std::size_t m = face.size();
  const std::size_t p = ref.position;
  const auto& f = face.sides;

  VertexId a = v;
  std::size_t i = 0;
  while (i < m) {
    const VertexId nb = slot(a, f[(p + i) % m]);
    if (nb == kNone) break;
    a = nb;
    ++i;
  }
  if (i == m) {
    if (a != v) {
      merge(a, v);
      settle();
    }
    record_face(v, s, ref.face, p);
    return;
  }
  VertexId b = v;
  std::size_t j = 0;
  while (i + j < m) {
    const VertexId nb = slot(b, f[(p + m - 1 - j) % m].inverse());
    if (nb == kNone) break;
    b = nb;
    ++j;
  }
  const std::size_t gap = m - i - j;
  if (gap == 0) {
    merge(a, b);
  } else {
    VertexId cur = a;
    for (std::size_t k = 0; k + 1 < gap; ++k) {
      const VertexId nv = new_vertex();
      link(cur, f[(p + i + k) % m], nv);
      cur = nv;
    }
    link(cur, f[(p + i + gap - 1) % m], b);
  }
  settle();
  record_face(v, s, ref.face, p);
}

void TilingBall::complete_vertex(VertexId v) {
  v = find(v);
  if (complete_[v]) return;
  Dart s(0);
  for (std::size_t k = 0; k < darts_; ++k) {
    if (complex_->face(side_[rot_next_[s.code()]].face).is_disk()) complete_corner(v, s);
    s = Dart(rot_next_[s.code()]);
  }
  v = find(v);
  for (std::size_t c = 0; c < darts_; ++c) {
    const Dart d(static_cast<std::uint8_t>(c));
    if (slot(v, d) == kNone) {
      const VertexId nv = new_vertex();
      link(v, d, nv);
      settle();
      v = find(v);
    }
  }
  complete_[find(v)] = 1;
}

std::vector<TilingBall::VertexId> TilingBall::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_);
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] == static_cast<VertexId>(v)) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::size_t TilingBall::num_edges() const {
  std::size_t count = 0;
  for (VertexId v : vertices()) {
    for (std::size_t c = 0; c < darts_; c += 2) {
      if (slot(v, Dart(static_cast<std::uint8_t>(c))) != kNone) ++count;
    }
  }
  return count;
}

std::vector<int> TilingBall::distances_from(VertexId v, int max_depth) const {
  std::vector<int> dist(parent_.size(), -1);
  v = find(v);
  dist[v] = 0;
  std::deque<VertexId> queue{v};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (dist[x] >= max_depth) continue;
    for (std::size_t c = 0; c < darts_; ++c) {
      const VertexId y = slot(x, Dart(static_cast<std::uint8_t>(c)));
      if (y != kNone && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

void TilingBall::grow_to_depth(std::size_t radius) {
  if (radius == 0) return;
  const int inner = static_cast<int>(radius) - 1;
  bool changed = true;
  while (changed) {
    changed = false;
    const auto dist = distances_from(origin(), inner);
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v] < 0 || dist[v] > inner) continue;
      const auto id = static_cast<VertexId>(v);
      if (!complete_[find(id)]) {
        complete_vertex(id);
        changed = true;
      }
    }
  }
}

std::vector<TilingBall::FaceRecord> TilingBall::faces() const {
  std::map<std::pair<std::size_t, VertexId>, int> best;
  for (const FaceRecord& f : face_log_) {
    const auto key = std::make_pair(f.face, find(f.corner0));
    auto [it, inserted] = best.emplace(key, f.layer);
    if (!inserted && f.layer > 0 && (it->second == 0 || f.layer < it->second)) it->second = f.layer;
  }
  std::vector<FaceRecord> out;
  out.reserve(best.size());
  for (const auto& [key, layer] : best) out.push_back({key.first, key.second, layer});
  return out;
}

std::vector<TilingBall::VertexId> TilingBall::face_vertices(const FaceRecord& f) const {
  const auto& sides = complex_->face(f.face).sides;
  std::vector<VertexId> out;
  VertexId v = find(f.corner0);
  for (Dart d : sides) {
    out.push_back(v);
    v = slot(v, d);
    if (v == kNone) break;
  }
  return out;
}

void TilingBall::grow_layers(std::size_t layers) {
  std::set<VertexId> region{origin()};
  for (std::size_t i = 1; i <= layers; ++i) {
    current_layer_ = static_cast<int>(i);
    for (VertexId v : region) {
      complete_vertex(v);
      const VertexId r = find(v);
      Dart s(0);
      for (std::size_t k = 0; k < darts_; ++k) {
        complete_corner(r, s);
        s = Dart(rot_next_[s.code()]);
      }
    }
    std::set<VertexId> next;
    for (VertexId v : region) next.insert(find(v));
    for (const FaceRecord& f : faces()) {
      if (f.layer <= 0 || f.layer > static_cast<int>(i)) continue;
      for (VertexId v : face_vertices(f)) next.insert(find(v));
    }
    region = std::move(next);
    layers_grown_ = std::max(layers_grown_, i);
  }
  current_layer_ = 0;
}

TilingBall::VertexId TilingBall::trace_path(const Word& word, VertexId start) {
  VertexId v = find(start);
  for (std::size_t i = 0; i < word.size(); ++i) {
    VertexId nb = slot(v, word[i]);
    if (nb == kNone) {
      complete_vertex(v);
      nb = slot(find(v), word[i]);
    }
    v = find(nb);
  }
  return v;
}

nlohmann::ordered_json TilingBall::stats_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = num_vertices();
  j["edges"] = num_edges();
  j["faces"] = faces().size();
  j["layers"] = layers_grown_;
  return j;
}

std::string TilingBall::to_dot() const {
  std::string out = "digraph ball {\n";
  for (VertexId v : vertices()) {
    out += "  v" + std::to_string(v) + (v == origin() ? " [shape=doublecircle];\n" : ";\n");
  }
  for (VertexId v : vertices()) {
    for (std::size_t c = 0; c < darts_; c += 2) {
      const Dart d(static_cast<std::uint8_t>(c));
      const VertexId w = slot(v, d);
      if (w == kNone) continue;
      out += "  v" + std::to_string(v) + " -> v" + std::to_string(w) + " [label=\"" +
             complex_->alphabet().dart_name(d) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace swl

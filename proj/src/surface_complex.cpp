#include "swl/surface_complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "swl/error.hpp"

namespace swl {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool valid_generator_name(const std::string& name) {
  return !name.empty() && name.find_first_of("'^#:") == std::string::npos;
}

}  // namespace

SurfaceSpec parse_surface_spec(std::string_view text) {
  std::optional<std::vector<std::string>> generators;
  std::optional<std::vector<std::string>> rotation;
  std::optional<std::vector<std::string>> holed;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected 'key: values'");
    }
    const std::string key{trim(line.substr(0, colon))};
    auto values = split_tokens(line.substr(colon + 1));
    std::optional<std::vector<std::string>>* slot = nullptr;
    if (key == "generators") slot = &generators;
    else if (key == "rotation") slot = &rotation;
    else if (key == "holed") slot = &holed;
    else throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": unknown section '" + key + "'");
    if (slot->has_value()) {
      throw Error(ErrorKind::parse, "section '" + key + "' given twice");
    }
    *slot = std::move(values);
  }
  if (!generators) throw Error(ErrorKind::missing_section, "missing 'generators:' section");
  if (!rotation) throw Error(ErrorKind::missing_section, "missing 'rotation:' section");
  if (!holed) throw Error(ErrorKind::missing_section, "missing 'holed:' section");

  if (generators->size() < 2) {
    throw Error(ErrorKind::parse, "at least two generators are required");
  }
  std::set<std::string> seen_names;
  for (const auto& name : *generators) {
    if (!valid_generator_name(name)) throw Error(ErrorKind::parse, "invalid generator name '" + name + "'");
    if (!seen_names.insert(name).second) throw Error(ErrorKind::parse, "duplicate generator '" + name + "'");
  }
  if (generators->size() > 127) throw Error(ErrorKind::too_large, "at most 127 generators are supported");

  SurfaceSpec spec;
  spec.alphabet = Alphabet(*generators);
  std::vector<bool> used(spec.num_darts(), false);
  for (const auto& tok : *rotation) {
    Dart d;
    if (!spec.alphabet.lookup_dart(tok, d)) {
      throw Error(ErrorKind::unknown_symbol, "unknown dart '" + tok + "' in rotation");
    }
    if (used[d.code()]) throw Error(ErrorKind::duplicate_dart, "dart '" + tok + "' listed twice in rotation");
    used[d.code()] = true;
    spec.rotation.push_back(d);
  }
  if (spec.rotation.size() != spec.num_darts()) {
    throw Error(ErrorKind::parse, "rotation must list all " + std::to_string(spec.num_darts()) + " darts");
  }
  for (const auto& tok : *holed) {
    std::size_t idx = 0;
    std::size_t consumed = 0;
    try {
      idx = std::stoul(tok, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != tok.size() || tok.empty() || tok[0] == '-') {
      throw Error(ErrorKind::unknown_symbol, "holed entry '" + tok + "' is not a face index");
    }
    spec.holed_faces.push_back(idx);
  }
  std::sort(spec.holed_faces.begin(), spec.holed_faces.end());
  if (std::adjacent_find(spec.holed_faces.begin(), spec.holed_faces.end()) != spec.holed_faces.end()) {
    throw Error(ErrorKind::parse, "holed face listed twice");
  }
  return spec;
}

std::string to_spec_text(const SurfaceSpec& spec) {
  std::string out = "generators:";
  for (const auto& name : spec.alphabet.names()) out += " " + name;
  out += "\nrotation:";
  for (Dart d : spec.rotation) out += " " + spec.alphabet.dart_name(d);
  out += "\nholed:";
  for (auto f : spec.holed_faces) out += " " + std::to_string(f);
  out += "\n";
  return out;
}

Complex trace_faces(const SurfaceSpec& spec) {
  Complex c;
  c.spec_ = spec;
  const std::size_t nd = spec.num_darts();
  c.rot_next_.assign(nd, 0);
  c.rot_prev_.assign(nd, 0);
  for (std::size_t i = 0; i < nd; ++i) {
    const Dart cur = spec.rotation[i];
    const Dart nxt = spec.rotation[(i + 1) % nd];
    c.rot_next_[cur.code()] = nxt.code();
    c.rot_prev_[nxt.code()] = cur.code();
  }
  c.side_of_.assign(nd, SideRef{});
  std::vector<bool> visited(nd, false);
  for (std::size_t start = 0; start < nd; ++start) {
    if (visited[start]) continue;
    Face f;
    f.id = c.faces_.size();
    Dart d(static_cast<std::uint8_t>(start));
    while (!visited[d.code()]) {
      visited[d.code()] = true;
      c.side_of_[d.code()] = SideRef{f.id, f.sides.size()};
      f.sides.push_back(d);
      d = c.face_next(d);
    }
    c.faces_.push_back(std::move(f));
  }
  for (auto idx : spec.holed_faces) {
    if (idx >= c.faces_.size()) {
      throw Error(ErrorKind::invalid_face, "holed face " + std::to_string(idx) + " out of range (" +
                                               std::to_string(c.faces_.size()) + " faces)");
    }
    c.faces_[idx].kind = FaceKind::holed;
  }
  const int n = static_cast<int>(spec.num_generators());
  const int disks = static_cast<int>(c.num_disk_faces());
  c.boundary_ = static_cast<int>(spec.holed_faces.size());
  c.euler_ = 1 - n + disks;
  // The closed surface obtained by capping the holes has
  // chi_closed = 1 - n + #faces = 2 - 2g.
  const int chi_closed = 1 - n + static_cast<int>(c.faces_.size());
  c.genus_ = (2 - chi_closed) / 2;
  return c;
}

Complex build_complex(const SurfaceSpec& spec) {
  Complex c = trace_faces(spec);
  if (3 * c.genus() + c.boundary_count() <= 3) {
    throw Error(ErrorKind::degenerate_surface,
                "surface with genus " + std::to_string(c.genus()) + " and " +
                    std::to_string(c.boundary_count()) + " boundary components violates 3g + r > 3");
  }
  for (const auto& f : c.faces()) {
    if (f.is_disk() && f.size() < 3) {
      throw Error(ErrorKind::degenerate_surface,
                  "disk face " + std::to_string(f.id) + " has " + std::to_string(f.size()) +
                      " sides; the generating set is not simple");
    }
  }
  return c;
}

bool Complex::has_disk_faces() const { return num_disk_faces() > 0; }

std::size_t Complex::num_disk_faces() const {
  return static_cast<std::size_t>(
      std::count_if(faces_.begin(), faces_.end(), [](const Face& f) { return f.is_disk(); }));
}

Word face_boundary_word(const Complex& complex, std::size_t face_id) {
  if (face_id >= complex.faces().size()) {
    throw Error(ErrorKind::unknown_face, "unknown face f" + std::to_string(face_id));
  }
  return Word(complex.face(face_id).sides);
}

nlohmann::ordered_json complex_to_json(const Complex& complex) {
  nlohmann::ordered_json j;
  j["generators"] = complex.alphabet().names();
  j["genus"] = complex.genus();
  j["boundary"] = complex.boundary_count();
  j["euler"] = complex.euler_characteristic();
  auto faces = nlohmann::ordered_json::array();
  for (const auto& f : complex.faces()) {
    nlohmann::ordered_json jf;
    jf["id"] = f.id;
    jf["kind"] = f.is_disk() ? "disk" : "holed";
    jf["word"] = complex.alphabet().format(face_boundary_word(complex, f.id));
    faces.push_back(std::move(jf));
  }
  j["faces"] = std::move(faces);
  return j;
}

std::vector<SurfaceSpec> search_generating_sets(std::size_t n, const FacePredicate& predicate,
                                                std::vector<std::string> names) {
  if (n < 2) throw Error(ErrorKind::parse, "search needs at least two generators");
  if (n > kMaxSearchGenerators) {
    throw Error(ErrorKind::too_large, "search is limited to n <= " + std::to_string(kMaxSearchGenerators));
  }
  if (names.empty()) {
    for (std::size_t g = 0; g < n; ++g) names.push_back("g" + std::to_string(g + 1));
  }
  if (names.size() != n) throw Error(ErrorKind::parse, "need one name per generator");

  SurfaceSpec base;
  base.alphabet = Alphabet(std::move(names));
  std::vector<Dart> tail;
  for (std::size_t c = 1; c < 2 * n; ++c) tail.push_back(Dart(static_cast<std::uint8_t>(c)));

  std::vector<SurfaceSpec> out;
  do {
    SurfaceSpec spec = base;
    spec.rotation.push_back(Dart(0));
    spec.rotation.insert(spec.rotation.end(), tail.begin(), tail.end());
    const Complex closed = trace_faces(spec);
    const std::size_t nf = closed.faces().size();
    // Faces with fewer than three sides can only be holed.
    std::size_t forced = 0;
    for (const auto& f : closed.faces()) {
      if (f.size() < 3) forced |= std::size_t{1} << f.id;
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << nf); ++mask) {
      if ((mask & forced) != forced) continue;
      const int r = std::popcount(mask);
      if (3 * closed.genus() + r <= 3) continue;
      spec.holed_faces.clear();
      for (std::size_t f = 0; f < nf; ++f) {
        if (mask & (std::size_t{1} << f)) spec.holed_faces.push_back(f);
      }
      Complex c = build_complex(spec);
      if (predicate(c)) out.push_back(spec);
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

}  // namespace swl

#include <doctest.h>

#include <future>
#include <random>
#include <thread>

#include "support.hpp"
#include "swl/cover_oracle.hpp"
#include "swl/geodesic_engine.hpp"
#include "swl/tiling_ball.hpp"

using namespace swl;

namespace {

struct Fixture {
  Complex complex;
  GeodesicEngine engine;
  explicit Fixture(const std::string& name) : complex(testing::load(name)), engine(complex) {}
  Word w(const char* text) const { return complex.alphabet().parse_word(text); }
  std::string str(const Word& word) const { return complex.alphabet().format(word); }
};

Fixture& genus2() {
  static Fixture f("genus2.srf");
  return f;
}
Fixture& torus() {
  static Fixture f("torus.srf");
  return f;
}
Fixture& abc() {
  static Fixture f("torus_abc.srf");
  return f;
}

}  // namespace

TEST_CASE("gallery regions") {
  {
    const auto& f = genus2();
    const auto regions = enumerate_galleries(f.complex, f.engine.lambda(), 8);
    bool octagon = false;
    for (const auto& r : regions) octagon |= r.polygons.size() == 1 && r.exterior.size() == 8;
    CHECK(octagon);
  }
  {
    const auto& f = torus();
    CHECK(enumerate_galleries(f.complex, f.engine.lambda(), 12).empty());
  }
  {
    const auto& f = abc();
    const auto regions = enumerate_galleries(f.complex, f.engine.lambda(), 6);
    REQUIRE(regions.size() == 1);
    CHECK(regions[0].polygons.size() == 1);
    CHECK(regions[0].exterior.size() == 3);
  }
}

TEST_CASE("gallery structure") {
  for (const auto& name : testing::fixture_names()) {
    CAPTURE(name);
    const Complex c = testing::load(name);
    const LambdaSystem lam = build_lambda(c);
    TilingBall ball(c);
    for (const auto& r : enumerate_galleries(c, lam, 16, true)) {
      REQUIRE_FALSE(r.polygons.empty());
      std::size_t sides = 0;
      for (std::size_t p : r.polygons) {
        CHECK(c.face(p).is_disk());
        sides += c.face(p).size();
      }
      CHECK(r.exterior.size() == sides - 2 * r.interior_edges.size());
      CHECK(r.exterior.size() <= 16);
      REQUIRE(r.interior_edges.size() + 1 == r.polygons.size());
      for (std::size_t t = 0; t + 1 < r.polygons.size(); ++t) {
        const Dart exit = r.exits[t];
        CHECK(c.side_of(exit).face == r.polygons[t]);
        CHECK(c.side_of(exit.inverse()).face == r.polygons[t + 1]);
        CHECK(exit.generator() == r.interior_edges[t]);
      }
      // The exterior cycle lifts to a closed loop in the cover.
      Word boundary;
      for (Dart d : r.exterior) boundary.push_back(d);
      CHECK(ball.trace_path(boundary) == ball.origin());
    }
  }
}

TEST_CASE("single moves") {
  auto& f = genus2();
  const auto from_relator = f.engine.apply_moves(f.w("a1 b1 a1' b1' a2 b2 a2' b2'"));
  CHECK(from_relator.count(Word{}) == 1);
  const auto from_half = f.engine.apply_moves(f.w("a1 b1 a1' b1'"));
  CHECK(from_half.count(f.w("b2 a2 b2' a2'")) == 1);
  for (const Word& x : from_half) CHECK(x.size() <= 4);
  auto& t = torus();
  CHECK(t.engine.apply_moves(t.w("a b a b")).empty());
  CHECK(t.engine.apply_moves(t.w("a b' a' b")).empty());
}

TEST_CASE("shortest words") {
  auto& f = genus2();
  auto r = f.engine.shortest_word(f.w("a1 b1 a1' b1' a2 b2 a2' b2'"));
  CHECK(r.length == 0);
  CHECK(r.witness.empty());
  r = f.engine.shortest_word(f.w("a1 b1 a1' b1' a2 b2 a2'"));
  CHECK(r.length == 1);
  CHECK(f.str(r.witness) == "b2");
  r = f.engine.shortest_word(f.w("a1 b1 a1' b1' a2"));
  CHECK(r.length == 3);
  CHECK(f.str(r.witness) == "b2 a2 b2'");
  auto& t = torus();
  r = t.engine.shortest_word(t.w("a b a b"));
  CHECK(r.length == 4);
  CHECK(t.str(r.witness) == "a b a b");
  r = t.engine.shortest_word(t.w("a b b' a' b"));
  CHECK(t.str(r.witness) == "b");
  CHECK(testing::error_kind([&] { t.engine.shortest_word(Word{Dart::of(3, false)}); }) ==
        ErrorKind::unknown_generator);
}

TEST_CASE("is_shortest") {
  auto& f = genus2();
  CHECK_FALSE(f.engine.is_shortest(f.w("a1 b1 a1' b1' a2")));
  CHECK(f.engine.is_shortest(f.w("b2 a2 b2'")));
  for (const auto& name : testing::fixture_names()) {
    const Complex c = testing::load(name);
    const GeodesicEngine e(c);
    for (std::size_t d = 0; d < c.num_darts(); ++d)
      CHECK(e.is_shortest(Word{Dart(static_cast<std::uint8_t>(d))}));
  }
}

TEST_CASE("cyclic shortest") {
  auto& t = torus();
  auto r = t.engine.cyclic_shortest(t.w("a b a'"));
  CHECK(r.length == 1);
  CHECK(r.witness == CyclicWord(t.w("b")));
  r = t.engine.cyclic_shortest(CyclicWord(t.w("a b a b a b")));
  CHECK(r.length == 6);
  CHECK(r.witness == CyclicWord(t.w("a b a b a b")));
  auto& f = genus2();
  r = f.engine.cyclic_shortest(f.w("a1 b1 a1' b1' a2 b2 a2' b2'"));
  CHECK(r.length == 0);
  CHECK(r.witness.empty());
  // A rotation of a word one letter short of the relator.
  r = f.engine.cyclic_shortest(f.w("b2' a1 b1 a1' b1' a2 b2 a2'"));
  CHECK(r.length == 0);
  r = f.engine.cyclic_shortest(f.w("b1' a2 b2 a2' b2' a1 b1"));
  CHECK(r.length == 1);
}

TEST_CASE("intersection numbers") {
  auto& f = genus2();
  CHECK(f.engine.intersection_number(CyclicWord(f.w("a2"))) == Rational(1));
  CHECK(f.engine.intersection_number(Word{}) == Rational(0));
  CHECK(f.engine.intersection_number(CyclicWord{}) == Rational(0));
  auto& t = torus();
  CHECK(t.engine.intersection_number(t.w("a b a b")) == Rational(4));
  CHECK(f.engine.intersection_number(f.w("a1 b1 a1' b1' a2")) == Rational(3));
}

TEST_CASE("every generator meets the strand system once") {
  for (const auto& name : testing::fixture_names()) {
    CAPTURE(name);
    const Complex c = testing::load(name);
    const GeodesicEngine e(c);
    for (std::size_t g = 0; g < c.num_generators(); ++g) {
      CHECK(e.intersection_number(Word{Dart::of(g, false)}) == Rational(1));
      CHECK(e.intersection_number(CyclicWord(Word{Dart::of(g, true)})) == Rational(1));
    }
  }
}

TEST_CASE("moves are sound in the cover") {
  for (const std::string name : {"genus2.srf", "torus_abc.srf"}) {
    CAPTURE(name);
    const Complex c = testing::load(name);
    const GeodesicEngine e(c);
    TilingBall ball(c);
    ball.grow_to_depth(6);
    std::size_t checked = 0;
    auto check_word = [&](const Word& w) {
      const auto end = ball.trace_path(w);
      for (const Word& x : e.apply_moves(w)) {
        CHECK(x.size() <= w.size());
        if (ball.trace_path(x) != end) FAIL("move breaks the element: " << c.alphabet().format(w));
        ++checked;
      }
    };
    for (std::size_t len = 1; len <= 5; ++len)
      testing::for_each_reduced_word(c.num_generators(), len, check_word);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 3000; ++i) check_word(testing::random_reduced_word(rng, c.num_generators(), 6));
    CHECK(checked > 100);
  }
}

TEST_CASE("witnesses represent the input") {
  auto& f = genus2();
  TilingBall ball(f.complex);
  ball.grow_to_depth(6);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Word w = testing::random_reduced_word(rng, 4, 6);
    const auto r = f.engine.shortest_word(w);
    CHECK(r.witness.size() == r.length);
    CHECK(ball.trace_path(r.witness) == ball.trace_path(w));
    CHECK(f.engine.is_shortest(r.witness));
  }
}

TEST_CASE("monotonicity, conjugation invariance, subadditivity") {
  std::mt19937_64 rng(3);
  for (Fixture* f : {&genus2(), &abc(), &torus()}) {
    const std::size_t n = f->complex.num_generators();
    for (int i = 0; i < 200; ++i) {
      const Word u = testing::random_reduced_word(rng, n, 1 + rng() % 4);
      const Word v = testing::random_reduced_word(rng, n, 1 + rng() % 5);
      const Word uv = concat(u, v);
      const std::size_t luv = f->engine.shortest_word(uv).length;
      CHECK(luv <= free_reduce(uv).size());
      CHECK(luv <= f->engine.shortest_word(u).length + f->engine.shortest_word(v).length);
      const Word conj = concat(concat(u, v), u.inverse());
      CHECK(f->engine.cyclic_shortest(conj).length == f->engine.cyclic_shortest(v).length);
      CHECK(f->engine.cyclic_shortest(v).length <= f->engine.shortest_word(v).length);
    }
  }
}

TEST_CASE("homogeneity on small samples") {
  std::mt19937_64 rng(5);
  for (Fixture* f : {&genus2(), &abc()}) {
    const std::size_t n = f->complex.num_generators();
    for (int i = 0; i < 40; ++i) {
      const Word w = testing::random_cyclically_reduced_word(rng, n, 1 + rng() % 3);
      const std::size_t base = f->engine.cyclic_shortest(w).length;
      for (std::size_t k = 2; k <= 4; ++k) CHECK(f->engine.cyclic_shortest(w.power(k)).length == k * base);
    }
  }
}

TEST_CASE("concurrent queries agree with serial ones") {
  const Complex c = testing::load("genus2.srf");
  const GeodesicEngine e(c);
  std::mt19937_64 rng(9);
  std::vector<Word> words;
  for (int i = 0; i < 400; ++i) words.push_back(testing::random_reduced_word(rng, 4, 4 + i % 6));
  std::vector<std::size_t> serial;
  {
    const GeodesicEngine fresh(c);
    for (const Word& w : words) serial.push_back(fresh.shortest_word(w).length);
  }
  std::vector<std::future<std::vector<std::size_t>>> jobs;
  for (int t = 0; t < 4; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      std::vector<std::size_t> out;
      // Each thread walks the list in a different order to force table growth races.
      for (std::size_t i = 0; i < words.size(); ++i) {
        const std::size_t j = t % 2 ? words.size() - 1 - i : i;
        out.push_back(e.shortest_word(words[j]).length);
      }
      if (t % 2) std::reverse(out.begin(), out.end());
      return out;
    }));
  }
  for (auto& j : jobs) CHECK(j.get() == serial);
}

TEST_CASE("move table") {
  auto& f = genus2();
  const auto table = f.engine.table_for(5);
  REQUIRE(table);
  CHECK(table->max_exterior >= 12);
  CHECK(table->num_galleries > 0);
  CHECK(table->min_pattern >= 1);
  CHECK(table->find(f.w("a1 b1 a1' b1'").codes()) != nullptr);
  for (const auto& [pattern, replacements] : table->rules) {
    const Word p(pattern);
    CHECK(free_reduce(p) == p);
    CHECK(pattern.size() >= table->min_pattern);
    CHECK(pattern.size() <= table->max_pattern);
    for (const auto& rep : replacements) CHECK(rep.size() <= pattern.size());
  }
  CHECK(f.engine.table_for(3)->max_exterior >= 8);
  CHECK(f.engine.table_for(9)->max_exterior >= 20);
  CHECK(torus().engine.table_for(6)->rules.empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holotriple/lattice.hpp"

using namespace holo;

namespace {

std::mt19937 rng(4242);

int pick(int n) {
  std::uniform_int_distribution<int> d(0, n - 1);
  return d(rng);
}

// Random walk of the requested length starting anywhere.
PathWord random_word(const CubicLattice& lat, int len) {
  PathWord w;
  w.base = pick(lat.num_vertices());
  int at = w.base;
  for (int k = 0; k < len; ++k) {
    std::vector<int> options;
    for (int d = 0; d < 3; ++d) {
      int e = lat.edge_at(at, d);
      if (e >= 0) options.push_back(e + 1);
      e = lat.edge_into(at, d);
      if (e >= 0) options.push_back(-(e + 1));
    }
    int l = options[pick(static_cast<int>(options.size()))];
    w.letters.push_back(l);
    at = letter_end(lat, l);
  }
  return w;
}

}  // namespace

TEST_CASE("vertex and edge counts") {
  auto l1 = build_lattice(1, true);
  CHECK(l1.num_vertices() == 1);
  CHECK(l1.num_edges() == 3);
  for (const Edge& e : l1.edges) CHECK(e.src == e.dst);

  auto l2 = build_lattice(2, true);
  CHECK(l2.num_vertices() == 8);
  CHECK(l2.num_edges() == 24);
  CHECK(l2.num_edges() == 3 * l2.num_vertices());

  auto l2o = build_lattice(2, false);
  CHECK(l2o.num_vertices() == 27);
  CHECK(l2o.num_edges() == 54);

  CHECK_THROWS(build_lattice(0, true));
}

TEST_CASE("edges step one unit along their axis") {
  for (bool periodic : {true, false}) {
    auto lat = build_lattice(3, periodic);
    for (const Edge& e : lat.edges) {
      auto a = lat.vertices[e.src];
      a[e.dir] += 1;
      CHECK(lat.vertex_index(a) == e.dst);
    }
    // No duplicates: (src, dir) determines the edge.
    for (int v = 0; v < lat.num_vertices(); ++v)
      for (int d = 0; d < 3; ++d) {
        int e = lat.edge_at(v, d);
        if (e >= 0) {
          CHECK(lat.edges[e].src == v);
          CHECK(lat.edges[e].dir == d);
        } else {
          CHECK(!periodic);
        }
      }
  }
}

TEST_CASE("subdivision doubles the extent and embeds parents") {
  auto parent = build_lattice(1, true);
  auto s = subdivide(parent);
  CHECK(s.child.extent == 2);
  CHECK(s.child.level == parent.level + 1);
  for (int v = 0; v < parent.num_vertices(); ++v) {
    auto c = s.child.vertices[s.vertex_image[v]];
    CHECK(c[0] % 2 == 0);
    CHECK(c[1] % 2 == 0);
    CHECK(c[2] % 2 == 0);
  }
  for (int e = 0; e < parent.num_edges(); ++e) {
    const PathWord& w = s.edge_image[e];
    CHECK(w.letters.size() == 2);
    for (int l : w.letters) {
      CHECK(letter_forward(l));
      CHECK(s.child.edges[letter_edge(l)].dir == parent.edges[e].dir);
    }
    CHECK(word_start(s.child, w) == s.vertex_image[parent.edges[e].src]);
    CHECK(word_end(s.child, w) == s.vertex_image[parent.edges[e].dst]);
  }

  auto s2 = subdivide(s.child);
  CHECK(s2.child.extent == 4);
  for (int v = 0; v < parent.num_vertices(); ++v) {
    auto c = s2.child.vertices[s2.vertex_image[s.vertex_image[v]]];
    CHECK(c[0] % 4 == 0);
    CHECK(c[1] % 4 == 0);
    CHECK(c[2] % 4 == 0);
  }
}

TEST_CASE("reduction cancels adjacent inverses") {
  auto lat = build_lattice(2, true);
  PathWord w;
  w.base = 0;
  int e = lat.edge_at(0, 2);
  w.letters = {e + 1, -(e + 1)};
  auto r = reduce(lat, w);
  CHECK(r.letters.empty());
  CHECK(r.base == 0);

  // Inner cancellation only.
  int e1 = lat.edge_at(0, 0);
  int v1 = lat.edges[e1].dst;
  int e2 = lat.edge_at(v1, 1);
  int e3 = lat.edge_at(v1, 2);
  PathWord w2;
  w2.base = 0;
  w2.letters = {e1 + 1, e2 + 1, -(e2 + 1), e3 + 1};
  auto r2 = reduce(lat, w2);
  CHECK(r2.letters == std::vector<int>{e1 + 1, e3 + 1});

  CHECK_THROWS(check_path(lat, w2 = [] {
                 PathWord bad;
                 bad.base = 0;
                 bad.letters = {1, 1};
                 return bad;
               }()));
}

TEST_CASE("words against their inverses vanish") {
  auto lat = build_lattice(3, true);
  for (int trial = 0; trial < 1000; ++trial) {
    PathWord w = random_word(lat, 50);
    auto prod = compose(lat, w, inverse(lat, w));
    CHECK(prod.letters.empty());
    CHECK(prod.base == word_start(lat, w));
  }
}

TEST_CASE("reduction is idempotent and confluent") {
  auto lat = build_lattice(2, true);
  for (int trial = 0; trial < 200; ++trial) {
    PathWord w = random_word(lat, 12);
    auto r = reduce(lat, w);
    auto rr = reduce(lat, r);
    CHECK(r.letters == rr.letters);
    CHECK(r.base == rr.base);

    // Splice a cancelling pair at a random spot in the reduced word and
    // check the normal form is restored.
    int pos = r.letters.empty() ? 0 : pick(static_cast<int>(r.letters.size()));
    int at = r.letters.empty() ? r.base : (pos == 0 ? word_start(lat, r) : 0);
    if (!r.letters.empty() && pos > 0) {
      at = letter_end(lat, r.letters[pos - 1]);
    }
    int e = lat.edge_at(at, pick(3));
    PathWord spliced = r;
    spliced.letters.insert(spliced.letters.begin() + pos, {e + 1, -(e + 1)});
    auto back = reduce(lat, spliced);
    CHECK(back.letters == r.letters);
    CHECK(back.base == r.base);
  }
}

TEST_CASE("composition laws") {
  auto lat = build_lattice(2, true);
  for (int trial = 0; trial < 500; ++trial) {
    PathWord p = random_word(lat, 8);
    PathWord q;
    q.base = word_end(lat, p);
    q = [&] {
      PathWord w;
      w.base = word_end(lat, p);
      int at = w.base;
      for (int k = 0; k < 8; ++k) {
        int e = lat.edge_at(at, pick(3));
        w.letters.push_back(e + 1);
        at = letter_end(lat, e + 1);
      }
      return w;
    }();
    PathWord r;
    r = [&] {
      PathWord w;
      w.base = word_end(lat, q);
      int at = w.base;
      for (int k = 0; k < 8; ++k) {
        int e = lat.edge_at(at, pick(3));
        w.letters.push_back(e + 1);
        at = letter_end(lat, e + 1);
      }
      return w;
    }();
    auto lhs = compose(lat, compose(lat, p, q), r);
    auto rhs = compose(lat, p, compose(lat, q, r));
    CHECK(lhs.letters == rhs.letters);
    CHECK(lhs.base == rhs.base);
  }

  // Identities are neutral; endpoint mismatch rejected.
  PathWord p = random_word(lat, 5);
  PathWord empty_start;
  empty_start.base = word_start(lat, p);
  auto same = compose(lat, empty_start, p);
  CHECK(same.letters == reduce(lat, p).letters);
  if (word_end(lat, p) != word_start(lat, p)) {
    CHECK_THROWS(compose(lat, p, empty_start));
  }
}

TEST_CASE("exhaustive groupoid checks on the smallest torus") {
  auto lat = build_lattice(1, true);
  // All words up to length 2 over the 6 letters, based at the one vertex.
  std::vector<PathWord> words;
  PathWord empty;
  empty.base = 0;
  words.push_back(empty);
  for (int l1 = -3; l1 <= 3; ++l1) {
    if (l1 == 0) continue;
    PathWord w1;
    w1.base = 0;
    w1.letters = {l1};
    words.push_back(w1);
    for (int l2 = -3; l2 <= 3; ++l2) {
      if (l2 == 0) continue;
      PathWord w2 = w1;
      w2.letters.push_back(l2);
      words.push_back(w2);
    }
  }
  for (const auto& a : words)
    for (const auto& b : words)
      for (const auto& c : words) {
        auto lhs = compose(lat, compose(lat, a, b), c);
        auto rhs = compose(lat, a, compose(lat, b, c));
        CHECK(lhs.letters == rhs.letters);
      }
  for (const auto& a : words) {
    CHECK(compose(lat, a, inverse(lat, a)).letters.empty());
    CHECK(reduce(lat, reduce(lat, a)).letters == reduce(lat, a).letters);
  }
}

TEST_CASE("diffeo action on paths") {
  auto lat = build_lattice(2, true);
  auto id = identity_diffeo(lat);
  check_diffeo(lat, id);
  for (int trial = 0; trial < 50; ++trial) {
    PathWord p = reduce(lat, random_word(lat, 10));
    auto q = apply_diffeo(lat, id, p);
    CHECK(q.letters == p.letters);
  }

  // Quarter turn about z maps an x-edge to a y-edge word.
  auto rot = quarter_turn_z(lat);
  check_diffeo(lat, rot);
  int ex = lat.edge_at(0, 0);
  auto img = apply_diffeo(lat, rot, single_letter(lat, ex, true));
  CHECK(img.letters.size() == 1);
  CHECK(lat.edges[letter_edge(img.letters[0])].dir == 1);
  CHECK(letter_forward(img.letters[0]));

  // The body-diagonal rotation never reverses an edge.
  auto tri = body_diagonal_rotation(lat);
  check_diffeo(lat, tri);
  for (int e = 0; e < lat.num_edges(); ++e) {
    CHECK(tri.edge_paths[e].letters.size() == 1);
    CHECK(letter_forward(tri.edge_paths[e].letters[0]));
    int dparent = lat.edges[e].dir;
    int dchild = lat.edges[letter_edge(tri.edge_paths[e].letters[0])].dir;
    CHECK(dchild == (dparent + 1) % 3);
  }

  // Functoriality: applying in two steps equals applying the composite.
  auto tr = translation_diffeo(lat, {1, 0, 1});
  auto comp = compose(lat, tr, rot);
  check_diffeo(lat, comp);
  for (int trial = 0; trial < 100; ++trial) {
    PathWord p = reduce(lat, random_word(lat, 8));
    auto two = apply_diffeo(lat, tr, apply_diffeo(lat, rot, p));
    auto one = apply_diffeo(lat, comp, p);
    CHECK(two.letters == one.letters);
    CHECK(two.base == one.base);
  }
}

TEST_CASE("three quarter-z turns equal the inverse turn") {
  auto lat = build_lattice(2, true);
  auto rot = quarter_turn_z(lat);
  auto r2 = compose(lat, rot, rot);
  auto r4 = compose(lat, r2, r2);
  auto id = identity_diffeo(lat);
  for (int v = 0; v < lat.num_vertices(); ++v)
    CHECK(r4.vertex_map[v] == id.vertex_map[v]);
  for (int e = 0; e < lat.num_edges(); ++e)
    CHECK(r4.edge_paths[e].letters == id.edge_paths[e].letters);
}

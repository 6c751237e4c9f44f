#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "antimagic/canonical.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/serialize.hpp"
#include "antimagic/tree.hpp"
#include "fixtures.hpp"

using namespace antimagic;
using namespace antimagic::testing;

TEST_CASE("parse_tree accepts a plain edge list") {
  Tree t = parse_tree("0 1\n1 2");
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 2);
  CHECK(t.degree(1) == 2);
}

TEST_CASE("parse_tree handles comments and blank lines") {
  Tree t = parse_tree("# a path\n0 1\n\n1 2  # tail comment\n");
  CHECK(t.edge_count() == 2);
}

TEST_CASE("parse_tree rejects malformed input") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_tree(text);
    } catch (const ParseError& e) {
      return e.kind;
    }
    FAIL("expected a parse error");
    return ParseError::Kind::Empty;
  };
  CHECK(kind_of("0 1\n0 1") == ParseError::Kind::DuplicateEdge);
  CHECK(kind_of("0 1\n1 0") == ParseError::Kind::DuplicateEdge);
  CHECK(kind_of("0 1\n2 3") == ParseError::Kind::Disconnected);
  CHECK(kind_of("1 1") == ParseError::Kind::SelfLoop);
  CHECK(kind_of("0 1\n1 2\n2 0") == ParseError::Kind::CycleDetected);
  CHECK(kind_of("") == ParseError::Kind::Empty);
  CHECK(kind_of("0 x") == ParseError::Kind::MalformedLine);

  try {
    parse_tree("0 1\nbroken line\n1 2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::MalformedLine);
    CHECK(e.line == 2);
  }
}

TEST_CASE("find_even_path classifies the small cases") {
  SECTION("P4: the two interior vertices") {
    auto st = find_even_path(path_tree(4));
    REQUIRE(st.tag == EvenPathTag::EvenPathOfEvenOrder);
    CHECK(st.path == std::vector<VertexId>{1, 2});
    CHECK(st.half_order() == 1);
  }
  SECTION("star K_{1,3}: all degrees odd") {
    CHECK(find_even_path(star_tree(3)).tag == EvenPathTag::EmptyEven);
  }
  SECTION("P5: three interior even vertices") {
    auto st = find_even_path(path_tree(5));
    CHECK(st.tag == EvenPathTag::OddCount);
    CHECK(st.even_count == 3);
  }
  SECTION("non-adjacent even vertices") {
    // 0-1-2-3-4 with extra leaf at 2: even vertices 1 and 3 are not
    // adjacent.
    Tree t = make_tree({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    auto st = find_even_path(t);
    REQUIRE(st.tag == EvenPathTag::NotAPath);
    CHECK(st.reason == NotAPathReason::Disconnected);
  }
  SECTION("branching even vertex") {
    // Spider with center degree 4: three legs of length 2 and one of
    // length 1. The even vertices are the center and the three leg
    // midpoints, all adjacent only to the center.
    Tree t = make_tree({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6},
                        {0, 7}});
    auto st = find_even_path(t);
    REQUIRE(st.tag == EvenPathTag::NotAPath);
    CHECK(st.reason == NotAPathReason::BranchingVertex);
  }
}

TEST_CASE("find_even_path agrees with the brute-force definition") {
  for (int n = 3; n <= 7; ++n) {
    trees_from_pruefer(n, [](const Tree& t) {
      auto st = find_even_path(t);
      auto naive = naive_even_path(t);
      if (naive.empty) {
        REQUIRE(st.tag == EvenPathTag::EmptyEven);
      } else if (naive.odd_count) {
        REQUIRE(st.tag == EvenPathTag::OddCount);
      } else if (naive.is_even_path) {
        REQUIRE(st.tag == EvenPathTag::EvenPathOfEvenOrder);
        std::vector<VertexId> rev(st.path.rbegin(), st.path.rend());
        REQUIRE((st.path == naive.order || rev == naive.order));
        REQUIRE(st.path.front() < st.path.back());
      } else {
        REQUIRE(st.tag == EvenPathTag::NotAPath);
      }
    });
  }
}

TEST_CASE("find_even_path is label-invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Tree t = sample_tree(10, rng());
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Tree u = permute_tree(t, perm);
    auto a = find_even_path(t);
    auto b = find_even_path(u);
    REQUIRE(a.tag == b.tag);
    if (a.tag == EvenPathTag::EvenPathOfEvenOrder) {
      std::vector<VertexId> mapped;
      for (VertexId v : a.path) mapped.push_back(perm[v]);
      std::vector<VertexId> rev(mapped.rbegin(), mapped.rend());
      REQUIRE((b.path == mapped || b.path == rev));
    }
  }
}

TEST_CASE("even path induces exactly 2p-1 edges") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Tree t = sample_tree(3 + static_cast<int>(rng() % 9), rng());
    auto st = find_even_path(t);
    if (st.tag != EvenPathTag::EvenPathOfEvenOrder) continue;
    std::set<VertexId> on(st.path.begin(), st.path.end());
    int induced = 0;
    for (auto [u, v] : t.edges()) induced += on.count(u) && on.count(v);
    REQUIRE(induced == static_cast<int>(st.path.size()) - 1);
  }
}

TEST_CASE("serialize round-trips through parse_tree") {
  Tree t = swap_fixture_tree();
  Tree back = parse_tree(serialize(t, std::nullopt, OutputFormat::EdgeList));
  CHECK(back.edges() == t.edges());
}

TEST_CASE("structured document lists recomputed sums") {
  Tree t = path_tree(4);
  EdgeLabeling phi(3);
  phi[0] = 1;
  phi[1] = 3;
  phi[2] = 2;
  auto doc = structured_document(t, phi);
  CHECK(doc["n"] == 4);
  CHECK(doc["modulus"] == 5);
  std::vector<long long> sums;
  for (const auto& entry : doc["sums"]) sums.push_back(entry[1]);
  CHECK(sums == std::vector<long long>{1, 4, 5, 2});
}

TEST_CASE("dot output starts with the graph header") {
  Tree t = path_tree(4);
  CHECK(serialize(t, std::nullopt, OutputFormat::Dot).starts_with("graph {"));
}

TEST_CASE("serialize rejects a labeling of the wrong size") {
  Tree t = path_tree(4);
  EdgeLabeling phi(2);
  phi[0] = 1;
  phi[1] = 2;
  CHECK_THROWS_AS(serialize(t, phi, OutputFormat::EdgeList),
                  LabelingMismatch);
}

TEST_CASE("canonical form: basic separations") {
  Tree p3 = path_tree(3);
  Tree p3b = make_tree({{2, 0}, {0, 1}});  // same shape, ids permuted
  CHECK(canonical_form(p3) == canonical_form(p3b));
  CHECK(canonical_form(path_tree(4)) != canonical_form(star_tree(3)));
}

TEST_CASE("canonical form is a complete isomorphism invariant (small n)") {
  // Representatives per canonical class must be pairwise non-isomorphic,
  // and class counts must match the free-tree counts 1,1,2,3,6,11,23.
  const std::map<int, int> free_trees{{2, 1}, {3, 1}, {4, 2}, {5, 3},
                                      {6, 6}, {7, 11}, {8, 23}};
  for (auto [n, expected] : free_trees) {
    std::map<std::string, Tree> reps;
    trees_from_pruefer(n, [&](const Tree& t) {
      reps.emplace(canonical_form(t), t);
    });
    REQUIRE(static_cast<int>(reps.size()) == expected);
    for (auto a = reps.begin(); a != reps.end(); ++a)
      for (auto b = std::next(a); b != reps.end(); ++b)
        REQUIRE_FALSE(brute_isomorphic(a->second, b->second));
  }
}

TEST_CASE("canonical form is invariant under vertex permutation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    Tree t = sample_tree(n, rng());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(canonical_form(t) == canonical_form(permute_tree(t, perm)));
  }
}

TEST_CASE("degree sum equals twice the edge count") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Tree t = sample_tree(2 + static_cast<int>(rng() % 30), rng());
    long long total = 0;
    for (VertexId v = 0; v < t.vertex_count(); ++v) total += t.degree(v);
    REQUIRE(total == 2LL * t.edge_count());
    REQUIRE(t.edge_count() == t.vertex_count() - 1);
  }
}

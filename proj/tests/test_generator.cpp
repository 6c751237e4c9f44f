#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "antimagic/canonical.hpp"
#include "antimagic/generator.hpp"
#include "antimagic/labeler.hpp"
#include "antimagic/tree.hpp"
#include "antimagic/verifier.hpp"
#include "fixtures.hpp"

using namespace antimagic;
using namespace antimagic::testing;

namespace {

// children per vertex when rooting at `root`
std::map<VertexId, int> child_counts(
    const std::vector<std::pair<VertexId, VertexId>>& edges, VertexId root) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::map<VertexId, int> counts;
  counts[root] = 0;
  std::vector<std::pair<VertexId, VertexId>> stack{{root, -1}};
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    int c = 0;
    for (VertexId w : adj[v]) {
      if (w == parent) continue;
      ++c;
      stack.push_back({w, v});
    }
    counts[v] = c;
  }
  return counts;
}

}  // namespace

TEST_CASE("minimal spec yields a P4") {
  GenSpec spec{1, 2, 7, 1.0};
  Tree t = generate(spec);
  CHECK(t.edge_count() == 3);
  CHECK(canonical_form(t) == canonical_form(path_tree(4)));
}

TEST_CASE("generation is deterministic in the spec") {
  GenSpec spec{5, 40, 12345, 0.5};
  CHECK(generate(spec).edges() == generate(spec).edges());
}

TEST_CASE("infeasible budgets are rejected") {
  CHECK_THROWS_AS(generate(GenSpec{1, 1, 0, 0.5}), GenError);
  CHECK_THROWS_AS(generate(GenSpec{3, 0, 0, 0.5}), GenError);
  CHECK_THROWS_AS(generate(GenSpec{2, 7, 0, 0.5}), GenError);
  CHECK_THROWS_AS(generate(GenSpec{0, 2, 0, 0.5}), std::invalid_argument);
}

TEST_CASE("generate_odd_subtree shapes") {
  CHECK(generate_odd_subtree(0, 1).size == 1);
  CHECK(generate_odd_subtree(0, 1).edges.empty());

  auto two = generate_odd_subtree(2, 9);
  CHECK(two.size == 3);
  REQUIRE(two.edges.size() == 2);
  CHECK(two.edges[0].first == 0);
  CHECK(two.edges[1].first == 0);

  CHECK_THROWS_AS(generate_odd_subtree(3, 0), GenError);

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto rt = generate_odd_subtree(6, seed);
    REQUIRE(rt.edges.size() == 6);
    for (auto [v, c] : child_counts(rt.edges, 0)) REQUIRE(c % 2 == 0);
  }
}

TEST_CASE("generated trees satisfy the even-path condition with the same p") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 1000; ++trial) {
    GenSpec spec;
    spec.p = 1 + static_cast<int>(rng() % 50);
    spec.extra_budget = 2 * (3 + static_cast<int>(rng() % 500));
    spec.seed = rng();
    spec.leaf_endpoint_bias = (trial % 3) / 2.0;
    Tree t = generate(spec);
    REQUIRE(t.edge_count() == 2 * spec.p - 1 + spec.extra_budget);
    auto st = find_even_path(t);
    REQUIRE(st.tag == EvenPathTag::EvenPathOfEvenOrder);
    REQUIRE(st.half_order() == spec.p);
  }
}

TEST_CASE("bias steers the endpoint case") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Tree leafy = generate(GenSpec{4, 20, seed, 1.0});
    CHECK(decompose(leafy).case_tag == CaseTag::LeafEndpoint);
    Tree no_leaf_odd = generate(GenSpec{5, 20, seed, 0.0});
    CHECK(decompose(no_leaf_odd).case_tag == CaseTag::SwapOnly);
    Tree no_leaf_even = generate(GenSpec{4, 20, seed, 0.0});
    CHECK(decompose(no_leaf_even).case_tag == CaseTag::SwapAndExtend);
  }
}

TEST_CASE("large generation stays linear and labelable") {
  GenSpec spec{10, 200000, 2024, 0.5};
  Tree t = generate(spec);
  REQUIRE(t.edge_count() == 2 * 10 - 1 + 200000);
  EdgeLabeling phi = label(t, /*check=*/true);
  CHECK(is_antimagic(t, phi).ok);
}

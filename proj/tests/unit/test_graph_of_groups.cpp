#include "doctest.h"

#include "asdim/cayley.hpp"
#include "asdim/error.hpp"
#include "asdim/graph_of_groups.hpp"
#include "oracle.hpp"

using namespace asdim;

TEST_SUITE("graph_of_groups") {

TEST_CASE("Z*Z strata sizes match word counting") {
  const auto gog = splitting_for("amalgam:z*z");
  const std::int64_t R = 6;
  const auto window = cayley_window(gog->group(), R);
  const auto strat = stratify_words(*gog, window, R);
  CHECK(strat.partition_ok);
  CHECK(strat.factoring_ok);
  CHECK(strat.beyond.empty());
  // stratum j holds words starting with b with j syllables and words
  // starting with a with j+1 syllables
  for (std::int64_t j = 0; j <= R; ++j) {
    std::size_t expected = j == 0 ? 1 : 0;
    for (std::int64_t l = 1; l <= R; ++l)
      expected += (oracle::free_words_with_syllables(l, j) + oracle::free_words_with_syllables(l, j + 1)) / 2;
    CHECK(strat.strata[static_cast<std::size_t>(j)].size() == expected);
  }
}

TEST_CASE("factorizations multiply back") {
  for (const std::string spec : {"amalgam:z*z", "amalgam:z2*z3", "amalgam:central:2,3", "bs:1,2"}) {
    CAPTURE(spec);
    const auto gog = splitting_for(spec);
    const auto window = cayley_window(gog->group(), 4);
    const auto& G = *gog->group();
    const auto edges = gog->edges();
    for (const auto& g : window.elements) {
      const auto j = gog->stratum(g);
      if (j == 0) {
        CHECK(gog->in_vertex_group(g, 0));
        continue;
      }
      const auto f = gog->factor(g);
      CHECK(gog->stratum(f.prefix) == j - 1);
      const auto& e = edges.at(f.edge);
      CHECK(gog->in_vertex_group(f.vertex_part, e.target));
      CHECK(G.product(G.product(f.prefix, e.element), f.vertex_part) == g);
    }
  }
}

TEST_CASE("coset representatives are canonical") {
  const auto gog = splitting_for("amalgam:z2*z3");
  const auto window = cayley_window(gog->group(), 5);
  const auto& G = *gog->group();
  for (const auto& g : window.elements)
    for (int v = 0; v < gog->vertex_count(); ++v)
      for (const auto& h : gog->vertex_elements(v, 3)) {
        CHECK(gog->coset_rep(G.product(g, h), v) == gog->coset_rep(g, v));
      }
}

TEST_CASE("separation audits") {
  const auto gog = splitting_for("amalgam:z2*z3");
  const auto window = cayley_window(gog->group(), 8);
  const auto strat = stratify_words(*gog, window, 3);
  for (std::size_t e = 0; e < gog->edges().size(); ++e)
    for (std::int64_t r : {2, 4}) {
      const auto rep = separation_audit(*gog, window, strat.strata[1], e, r);
      CHECK(rep.coset_identity_ok);
      CHECK(rep.separated);
      CHECK(rep.pairs_checked > 0);
    }
}

TEST_CASE("separation audit refuses a window that is too small") {
  const auto gog = splitting_for("bs:1,2");
  const auto window = cayley_window(gog->group(), 3);
  const auto& G = *gog->group();
  const std::vector<Letter> up{2, 2, 2}, down{3, 3, 3};
  const PointSet edge_of_window({*window.find(evaluate(G, up)), *window.find(evaluate(G, down))});
  CHECK_THROWS_WITH_AS(separation_audit(*gog, window, edge_of_window, 0, 2),
                       doctest::Contains("window-too-small"), Error);
}

TEST_CASE("Bass-Serre trees") {
  const auto gog = free_product_splitting(2, 3);
  const auto bs = bass_serre_tree_window(*gog, 6, 4);
  CHECK(bs.acyclic);
  CHECK(bs.quotient_ok);
  CHECK(is_tree_metric(*bs.tree));
  CHECK(audit_action(bs.action).valid);
  // interior vertices have the index of the edge group: 2 and 3
  bool saw2 = false, saw3 = false;
  for (std::size_t v = 0; v < bs.vertices.size(); ++v) {
    if (bs.degree[v] == 2 && bs.vertices[v].type == 0) saw2 = true;
    if (bs.degree[v] == 3 && bs.vertices[v].type == 1) saw3 = true;
    CHECK(bs.degree[v] <= static_cast<std::size_t>(bs.vertices[v].type == 0 ? 2 : 3));
  }
  CHECK(saw2);
  CHECK(saw3);
}

TEST_CASE("HNN tree of BS(1,2)") {
  const auto gog = baumslag_solitar_splitting(2);
  CHECK(gog->is_hnn());
  const auto bs = bass_serre_tree_window(*gog, 4, 2);
  CHECK(bs.acyclic);
  CHECK(is_tree_metric(*bs.tree));
}

TEST_CASE("unknown splittings") {
  CHECK_THROWS_WITH_AS(splitting_for("z:2"), doctest::Contains("no-splitting"), Error);
}

}

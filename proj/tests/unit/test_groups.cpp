#include "doctest.h"

#include <random>
#include <sstream>

#include "asdim/error.hpp"
#include "asdim/groups.hpp"

using namespace asdim;

namespace {

// Space-separated generator names, e.g. "a a b^-1".
Element word(const GroupModel& g, const std::string& text) {
  std::istringstream in(text);
  std::vector<Letter> letters;
  for (std::string tok; in >> tok;) {
    bool found = false;
    for (Letter s = 0; s < g.generator_count() && !found; ++s)
      if (g.generator_name(s) == tok) {
        letters.push_back(s);
        found = true;
      }
    REQUIRE_MESSAGE(found, "no generator named " << tok << " in " << g.name());
  }
  return evaluate(g, letters);
}

std::vector<Letter> random_word(std::mt19937_64& rng, const GroupModel& g, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, g.generator_count() - 1);
  std::vector<Letter> w(len);
  for (auto& s : w) s = pick(rng);
  return w;
}

}  // namespace

TEST_SUITE("groups") {

TEST_CASE("group laws on random words") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> specs{"trivial", "z:3", "zs:2,3", "f:2", "cyclic:6", "sym:4",
                                       "product:f:2+cyclic:3", "lamplighter", "zwrz", "amalgam:z2*z3",
                                       "amalgam:z*z", "amalgam:central:2,3", "bs:1,2", "bs:1,1", "relhyp:f2|a"};
  for (const auto& spec : specs) {
    CAPTURE(spec);
    const GroupPtr g = make_group(spec);
    if (g->generator_count() == 0) {
      CHECK(g->identity() == g->inverse(g->identity()));
      continue;
    }
    for (int trial = 0; trial < 40; ++trial) {
      const auto u = random_word(rng, *g, 1 + trial % 7);
      const auto v = random_word(rng, *g, 1 + trial % 5);
      std::vector<Letter> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const Element eu = evaluate(*g, u), ev = evaluate(*g, v);
      CHECK(g->product(eu, ev) == evaluate(*g, uv));
      std::vector<Letter> inv;
      for (auto it = u.rbegin(); it != u.rend(); ++it) inv.push_back(g->inverse_letter(*it));
      CHECK(g->inverse(eu) == evaluate(*g, inv));
      CHECK(g->product(eu, g->inverse(eu)) == g->identity());
      CHECK(g->multiply(g->generator(u[0]), g->inverse_letter(u[0])) == g->identity());
    }
  }
}

TEST_CASE("relators hold") {
  const auto z23 = make_group("amalgam:z2*z3");
  CHECK(word(*z23, "a a") == z23->identity());
  CHECK(word(*z23, "b b b") == z23->identity());
  CHECK(word(*z23, "a b") != word(*z23, "b a"));

  const auto central = make_group("amalgam:central:2,3");
  CHECK(word(*central, "a a") == word(*central, "b b b"));
  CHECK(word(*central, "a a b") == word(*central, "b a a"));

  const auto bs = make_group("bs:1,2");
  CHECK(word(*bs, "t a t^-1") == word(*bs, "a a"));
  CHECK(word(*bs, "a t") != word(*bs, "t a"));

  const auto lamp = make_group("lamplighter");
  CHECK(word(*lamp, "l l") == lamp->identity());
  CHECK(word(*lamp, "t l T l") == word(*lamp, "l t l T"));
  CHECK(word(*lamp, "t l") != word(*lamp, "l t"));

  const auto s3 = make_group("sym:3");
  const std::vector<Letter> braid_l{0, 1, 0}, braid_r{1, 0, 1};
  CHECK(evaluate(*s3, braid_l) == evaluate(*s3, braid_r));
  CHECK(s3->generator_name(0) == "(0 1)");
}

TEST_CASE("closed-form lengths") {
  const auto z = make_group("z:2");
  CHECK(z->word_length(Element{3, -4}) == 7);
  const auto zs = make_group("zs:1,2,3");
  CHECK(zs->word_length(Element{7}) == 3);
  CHECK(zs->word_length(Element{-9}) == 3);
  const auto f2 = make_group("f:2");
  CHECK(f2->is_free());
  CHECK(f2->word_length(word(*f2, "a a b^-1 a")) == 4);
  const auto s4 = make_group("sym:4");
  CHECK(s4->word_length(Element{3, 2, 1, 0}) == 6);
}

TEST_CASE("BS(1,n) Britton forms round-trip") {
  const BaumslagSolitar bs(2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Element g = evaluate(bs, random_word(rng, bs, 10));
    CHECK(bs.from_britton(bs.britton(g)) == g);
  }
}

TEST_CASE("BS overflow is an error, not wraparound") {
  const BaumslagSolitar bs(7);
  Element g = bs.identity();
  CHECK_THROWS_WITH_AS(
      [&] {
        for (int i = 0; i < 200; ++i) g = bs.multiply(g, 3);  // t^-1
        for (int i = 0; i < 5; ++i) g = bs.multiply(g, 0);
      }(),
      doctest::Contains("group-overflow"), Error);
}

TEST_CASE("group names") {
  CHECK_THROWS_WITH_AS(make_group("nosuch"), doctest::Contains("unknown-group"), Error);
  CHECK_THROWS_AS(make_group("z:0x"), Error);
  CHECK_THROWS_AS(make_group("sym:40"), Error);
  CHECK(make_group("product:z:1+cyclic:2")->generator_count() == 3);
  CHECK(make_group("trivial")->generator_count() == 0);
  CHECK_FALSE(zoo_catalog().empty());
}

}

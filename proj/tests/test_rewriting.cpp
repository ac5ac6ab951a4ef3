#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "xlart/bench.hpp"
#include "xlart/oracle.hpp"
#include "xlart/rewriting.hpp"

using namespace xlart;
using xlart::test::W;

namespace {

  std::vector<GroupContext> contexts() {
    std::vector<GroupContext> out;
    out.push_back(GroupContext::uniform(3, EdgeLabel(4)));
    out.push_back(test::three_generator(4, 5, 4));
    out.push_back(test::three_generator(5, 0, 4));
    return out;
  }

}  // namespace

TEST_CASE("reduction examples") {
  auto ctx = GroupContext::uniform(3, EdgeLabel(4));
  CHECK(geodesic(W(ctx, "x1 x1^-1"), ctx).empty());
  Word w = W(ctx, "x1 x2 x1 x2 x2");
  CHECK(geodesic(w, ctx) == w);
  auto r = reduce_to_geodesic(W(ctx, "x1 x2 x1 x2^-1 x1^-1 x2^-1"), ctx);
  CHECK(r.word.size() == 2);
  CHECK(r.trace.result_length == 2);
  CHECK_FALSE(r.trace.steps.empty());
  CHECK(equal_elements(r.word, W(ctx, "x2^-1 x1"), ctx));
  CHECK(r.word == W(ctx, "x2^-1 x1"));
}

TEST_CASE("append and prepend") {
  auto ctx = GroupContext::dihedral(EdgeLabel(4));
  CHECK(append_reduce(Word{}, Letter::pos(0), ctx) == W(ctx, "x1"));
  CHECK(append_reduce(W(ctx, "x1"), Letter::neg(0), ctx).empty());
  Word w = append_reduce(W(ctx, "x1 x2 x1"), Letter::neg(1), ctx);
  CHECK(w.size() == 4);
  CHECK(equal_elements(w, W(ctx, "x1 x2 x1 x2^-1"), ctx));
  CHECK(prepend_reduce(Letter::neg(0), W(ctx, "x1 x2"), ctx) == W(ctx, "x2"));
  CHECK(prepend_reduce(Letter::neg(1), W(ctx, "x1 x2 x1 x2"), ctx).size() == 3);
}

TEST_CASE("divisors") {
  auto ctx = GroupContext::dihedral(EdgeLabel(4));
  Word w = W(ctx, "x1 x2 x1 x2");
  CHECK(is_left_divisor(Letter::pos(0), w, ctx));
  CHECK(is_left_divisor(Letter::pos(1), w, ctx));
  CHECK_FALSE(is_left_divisor(Letter::neg(0), w, ctx));
  CHECK(is_right_divisor(w, Letter::pos(0), ctx));
  CHECK(is_right_divisor(w, Letter::pos(1), ctx));
  CHECK_FALSE(is_right_divisor(W(ctx, "x1 x2 x1^-1"), Letter::pos(1), ctx));
}

TEST_CASE("equality examples") {
  auto ctx = GroupContext::dihedral(EdgeLabel(4));
  CHECK(equal_elements(W(ctx, "x1 x2 x1 x2"), W(ctx, "x2 x1 x2 x1"), ctx));
  CHECK_FALSE(equal_elements(W(ctx, "x1"), W(ctx, "x2"), ctx));
  auto ctx5 = GroupContext::dihedral(EdgeLabel(5));
  Word d = W(ctx5, "x1 x2 x1 x2 x1");
  CHECK(equal_elements(concat(concat(invert(d), W(ctx5, "x1")), d), W(ctx5, "x2"), ctx5));
}

TEST_CASE("closure and normal form examples") {
  auto ctx = GroupContext::dihedral(EdgeLabel(4));
  CHECK(geodesic_closure(W(ctx, "x1 x2 x1^-1"), ctx) == std::vector<Word>{W(ctx, "x1 x2 x1^-1")});
  CHECK(geodesic_closure(W(ctx, "x1 x2 x1 x2"), ctx)
        == std::vector<Word>{W(ctx, "x1 x2 x1 x2"), W(ctx, "x2 x1 x2 x1")});
  CHECK(geodesic_closure(Word{}, ctx) == std::vector<Word>{Word{}});
  CHECK(normal_form(W(ctx, "x2 x1 x2 x1"), ctx) == W(ctx, "x1 x2 x1 x2"));
  CHECK(normal_form(W(ctx, "x1 x1^-1"), ctx).empty());
  Word w = W(ctx, "x1 x2 x1 x2^-1 x1^-1 x2^-1");
  auto cl = oracle_closure(W(ctx, "x2^-1 x1"), 2, ctx);
  CHECK(normal_form(w, ctx) == cl.front());
  CHECK(normal_form(w, ctx).size() == 2);
}

TEST_CASE("closure cap") {
  auto ctx = GroupContext::dihedral(EdgeLabel(4));
  CHECK_THROWS_AS(geodesic_closure(W(ctx, "x1 x2 x1 x2 x1 x2 x1 x2"), ctx, 2), CapExceeded);
}

TEST_CASE("normal form follows the letter order") {
  auto ctx = GroupContext::dihedral(EdgeLabel(4));
  ctx.set_letter_order({Letter::pos(1), Letter::neg(1), Letter::pos(0), Letter::neg(0)});
  CHECK(normal_form(W(ctx, "x1 x2 x1 x2"), ctx) == W(ctx, "x2 x1 x2 x1"));
}

TEST_CASE("cyclic reduction examples") {
  auto ctx = GroupContext::uniform(3, EdgeLabel(4));
  Conjugated r = cyclic_reduce_element(W(ctx, "x1 x2 x1^-1"), ctx);
  CHECK(r.word == W(ctx, "x2"));
  CHECK(equal_elements(concat(concat(invert(r.conjugator), W(ctx, "x1 x2 x1^-1")), r.conjugator),
                       r.word, ctx));
  r = cyclic_reduce_element(W(ctx, "x1"), ctx);
  CHECK(r.word == W(ctx, "x1"));
  CHECK(r.conjugator.empty());

  r = specially_cyclically_reduce(W(ctx, "x1 x1^-1 x2"), ctx);
  CHECK(r.word == W(ctx, "x2"));
  CHECK(r.conjugator.empty());

  Word u = W(ctx, "x1 x2 x3");
  r = specially_cyclically_reduce(u, ctx);
  CHECK(r.word.size() == 3);
  CHECK(equal_elements(concat(concat(invert(r.conjugator), u), r.conjugator), r.word, ctx));
  for (auto const& rot : cyclic_conjugates(r.word)) {
    CHECK(geodesic(rot.word, ctx).size() == 3);
  }
}

TEST_CASE("reduction agrees with the oracle exhaustively on short words") {
  for (auto const& ctx : contexts()) {
    Oracle oracle(ctx);
    test::for_each_word(3, 5, [&](Word const& w) {
      Word g = geodesic(w, ctx);
      CHECK(g.size() == oracle.geodesic_length(w));
      CHECK(oracle.equal(w, g));
    });
  }
}

TEST_CASE("reduction agrees with the oracle on random words of length 8") {
  std::mt19937_64 rng(11);
  for (auto const& ctx : contexts()) {
    Oracle oracle(ctx);
    for (int i = 0; i < 300; ++i) {
      Word w = random_word(rng, ctx, 8);
      Word g = geodesic(w, ctx);
      CHECK(g.size() == oracle.geodesic_length(w));
      CHECK(oracle.equal(w, g));
      CHECK(geodesic(g, ctx).size() == g.size());
    }
  }
}

TEST_CASE("normal forms represent equality") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  for (auto const& ctx : contexts()) {
    Oracle oracle(ctx);
    for (int i = 0; i < 300; ++i) {
      Word u = random_word(rng, ctx, len(rng));
      // half the pairs are equal by construction
      Word v = i % 2 == 0 ? random_word(rng, ctx, len(rng))
                          : free_reduce(concat(u, W(ctx, i % 4 == 1 ? "x1 x2 x1 x2 x1^-1 x2^-1 x1^-1 x2^-1"
                                                                    : "x2 x3 x2^-1 x3^-1 x3 x2 x3^-1 x2^-1")));
      bool const eq = equal_elements(u, v, ctx);
      CHECK(eq == (normal_form(u, ctx) == normal_form(v, ctx)));
      CHECK(eq == oracle.equal(u, v));
    }
  }
}

TEST_CASE("normal form is the least word of the closure") {
  std::mt19937_64 rng(13);
  auto ctx = GroupContext::uniform(3, EdgeLabel(4));
  for (int i = 0; i < 300; ++i) {
    Word g = geodesic(random_word(rng, ctx, 7), ctx);
    CHECK(normal_form(g, ctx) == geodesic_closure(g, ctx).front());
  }
}

TEST_CASE("closure words are geodesics for the same element") {
  auto ctx = test::three_generator(4, 5, 4);
  Oracle oracle(ctx);
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    Word g = geodesic(random_word(rng, ctx, 6), ctx);
    std::vector<Word> geodesics;
    for (Word& x : oracle.closure(g, g.size() + 5)) {
      if (x.size() == g.size()) {
        geodesics.push_back(std::move(x));
      }
    }
    CHECK(geodesic_closure(g, ctx) == geodesics);
  }
}

TEST_CASE("at most two last letters, with different names") {
  for (auto const& ctx : contexts()) {
    test::for_each_word(3, 6, [&](Word const& w) {
      if (w.size() < 6) {
        return;
      }
      Word g = geodesic(w, ctx);
      std::set<std::size_t> last;
      for (Word const& x : geodesic_closure(g, ctx)) {
        if (!x.empty()) {
          last.insert(x.back().index());
        }
      }
      REQUIRE(last.size() <= 2);
      if (last.size() == 2) {
        CHECK(Letter::from_index(*last.begin()).name != Letter::from_index(*last.rbegin()).name);
      }
    });
  }
}

TEST_CASE("w a geodesic implies w a a geodesic") {
  for (auto const& ctx : contexts()) {
    test::for_each_word(3, 6, [&](Word const& wa) {
      if (wa.empty() || geodesic(wa, ctx).size() != wa.size()) {
        return;
      }
      Word waa = wa;
      waa.push_back(wa.back());
      CHECK(geodesic(waa, ctx).size() == waa.size());
    });
  }
}

TEST_CASE("cyclically reduced elements are not shortened by letter conjugation") {
  std::mt19937_64 rng(15);
  for (auto const& ctx : contexts()) {
    for (int i = 0; i < 200; ++i) {
      Word       w = random_word(rng, ctx, 1 + i % 9);
      Conjugated c = cyclic_reduce_element(w, ctx);
      Conjugated s = specially_cyclically_reduce(w, ctx);
      CHECK(equal_elements(concat(concat(invert(c.conjugator), w), c.conjugator), c.word, ctx));
      CHECK(equal_elements(concat(concat(invert(s.conjugator), w), s.conjugator), s.word, ctx));
      for (std::size_t k = 0; k < ctx.letter_count(); ++k) {
        Letter a = Letter::from_index(k);
        Word   conj_c = concat(concat(Word{a}, c.word), Word{a.inv()});
        Word   conj_s = concat(concat(Word{a}, s.word), Word{a.inv()});
        CHECK(geodesic(conj_c, ctx).size() >= c.word.size());
        CHECK(geodesic(conj_s, ctx).size() >= s.word.size());
      }
      if (!s.word.empty()) {
        for (auto const& rot : cyclic_conjugates(s.word)) {
          CHECK(geodesic(rot.word, ctx).size() == s.word.size());
        }
      }
    }
  }
}

#include <doctest.h>

#include "generators.hpp"
#include "ordmon/bicyclic.hpp"
#include "ordmon/error.hpp"

using namespace ordmon;
using namespace ordmon::literals;

namespace {
  MonoidParameter const B_w1 = MonoidParameter::omega_plus_one();

  BicyclicElement el(char const* text) {
    return parse_element(text, B_w1);
  }
}  // namespace

TEST_SUITE("bicyclic") {
  TEST_CASE("monoid parameter") {
    CHECK(B_w1.alpha() == "w + 1"_ord);
    CHECK(B_w1.bound() == "w^(w + 1)"_ord);
    CHECK(is_additively_indecomposable(B_w1.bound()));
    CHECK(MonoidParameter::classic().bound() == Ordinal::omega());
    CHECK_THROWS_AS(MonoidParameter{Ordinal()}, DomainError);
  }

  TEST_CASE("elements respect the bound") {
    CHECK_NOTHROW(el("(w^w*7 + w^3, 0)"));
    CHECK_THROWS_AS(el("(w^(w + 1), 0)"), DomainError);
    CHECK_THROWS_AS(parse_element("(w, 0)", MonoidParameter::classic()),
                    DomainError);
  }

  TEST_CASE("multiply") {
    CHECK(BicyclicElement::identity(B_w1) * el("(w^w + 3, w)")
          == el("(w^w + 3, w)"));
    CHECK(el("(w^w, w^w)") * el("(w^w*2, w^w*3)") == el("(w^w*2, w^w*3)"));
    CHECK(el("(2, 3)") * el("(1, 4)") == el("(2, 6)"));
    // b > c branch
    CHECK(el("(w, w + 1)") * el("(w, w + 1)") == el("(w, w + 2)"));
    CHECK(el("(0, w^2)") * el("(w, 5)") == el("(0, 5 + w^2)"));
  }

  TEST_CASE("multiply rejects mixed contexts") {
    BicyclicElement const x(MonoidParameter::classic(), Ordinal(1), Ordinal(2));
    CHECK_THROWS_AS(multiply(x, el("(1, 2)")), ContextMismatch);
  }

  TEST_CASE("inverse") {
    CHECK(inverse(BicyclicElement::identity(B_w1))
          == BicyclicElement::identity(B_w1));
    CHECK(inverse(el("(w, 5)")) == el("(5, w)"));
    CHECK(el("(w, 5)") * (el("(5, w)") * el("(w, 5)")) == el("(w, 5)"));
  }

  TEST_CASE("is_idempotent") {
    CHECK(is_idempotent(BicyclicElement::identity(B_w1)));
    CHECK(is_idempotent(el("(w^w, w^w)")));
    CHECK_FALSE(is_idempotent(el("(w, w + 1)")));
    CHECK(el("(w, w + 1)") * el("(w, w + 1)") != el("(w, w + 1)"));
  }

  TEST_CASE("embed") {
    BicyclicElement const x(MonoidParameter::classic(), Ordinal(3), Ordinal(4));
    BicyclicElement const y = embed(x, B_w1);
    CHECK(y.context() == B_w1);
    CHECK(y == el("(3, 4)"));
    CHECK_THROWS_AS(embed(el("(w, 0)"), MonoidParameter::classic()),
                    DomainError);
    // B_1 is a subsemigroup: products agree after embedding
    BicyclicElement const z(MonoidParameter::classic(), Ordinal(1), Ordinal(7));
    CHECK(embed(x * z, B_w1) == embed(x, B_w1) * embed(z, B_w1));
  }

  TEST_CASE("classic words") {
    CHECK(classic_from_word({0, 0})
          == BicyclicElement::identity(MonoidParameter::classic()));
    CHECK(classic_to_word(classic_from_word({4, 9})) == ClassicWord{4, 9});
    // q * p = qp
    CHECK(classic_from_word({1, 0}) * classic_from_word({0, 1})
          == classic_from_word({1, 1}));
    CHECK(classic_word_product({1, 0}, {0, 1}) == ClassicWord{1, 1});
    // p * q = 1
    CHECK(classic_from_word({0, 1}) * classic_from_word({1, 0})
          == classic_from_word({0, 0}));
    CHECK(classic_word_product({0, 1}, {1, 0}) == ClassicWord{0, 0});
    CHECK(classic_word_product({2, 3}, {1, 4}) == ClassicWord{2, 6});
    CHECK_THROWS_AS(classic_to_word(el("(1, 2)")), ContextMismatch);
  }

  TEST_CASE("lemma3_member") {
    BicyclicElement const c = el("(w^w + w, w^2*3)");
    CHECK(lemma3_member(c, c));
    CHECK(lemma3_member(el("(3, 3)"), el("(w, w)")));
    CHECK_FALSE(lemma3_member(el("(w, 3)"), el("(w, w)")));
    CHECK(lemma3_member(el("(0, w^w)"), el("(w, w^w + w)")));
  }

  TEST_CASE("text form") {
    CHECK(to_string(el(" ( w^w*2+w , 5 ) ")) == "(w^w*2 + w, 5)");
    CHECK_THROWS_AS(el("(w, 5"), ParseError);
    CHECK_THROWS_AS(el("w, 5)"), ParseError);
    CHECK_THROWS_AS(el("(w 5)"), ParseError);
    CHECK_THROWS_AS(el("(w, 5) x"), ParseError);
    testing::Rng rng(1);
    for (int i = 0; i < 500; ++i) {
      auto const x = testing::random_element(rng);
      REQUIRE(parse_element(to_string(x), B_w1) == x);
    }
  }
}

TEST_SUITE("bicyclic properties") {
  TEST_CASE("inverse semigroup axioms on sampled elements") {
    testing::Rng rng(21);
    BicyclicElement const one = BicyclicElement::identity(B_w1);
    for (int i = 0; i < 10000; ++i) {
      auto const x = testing::random_element(rng);
      auto const y = testing::random_element(rng);
      auto const z = testing::random_element(rng);
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE(x * inverse(x) * x == x);
      REQUIRE(inverse(x) * x * inverse(x) == inverse(x));
      REQUIRE(one * x == x);
      REQUIRE(x * one == x);
      auto const p = x * y;
      REQUIRE(B_w1.admits(p.left()));
      REQUIRE(B_w1.admits(p.right()));
      REQUIRE(is_idempotent(x) == (x * x == x));
    }
  }

  TEST_CASE("idempotents commute") {
    testing::Rng rng(22);
    for (int i = 0; i < 10000; ++i) {
      auto const e = testing::random_idempotent(rng);
      auto const f = testing::random_idempotent(rng);
      REQUIRE(e * f == f * e);
      REQUIRE(is_idempotent(e * f));
    }
  }

  TEST_CASE("(a, b)(b, c) = (a, c)") {
    testing::Rng rng(23);
    for (int i = 0; i < 10000; ++i) {
      Ordinal const a = testing::random_below_omega_omega_plus_one(rng);
      Ordinal const b = testing::random_below_omega_omega_plus_one(rng);
      Ordinal const c = testing::random_below_omega_omega_plus_one(rng);
      REQUIRE(BicyclicElement(B_w1, a, b) * BicyclicElement(B_w1, b, c)
              == BicyclicElement(B_w1, a, c));
    }
  }

  TEST_CASE("lemma3_member conclusions for accepted probes") {
    testing::Rng rng(24);
    int accepted = 0;
    for (int i = 0; i < 10000; ++i) {
      auto probe  = testing::random_element(rng);
      auto center = testing::random_element(rng);
      if (i % 2 == 0) {
        // shift the probe up by e on both sides; always accepted
        Ordinal const e = testing::random_below_omega_omega_plus_one(rng);
        center = BicyclicElement(B_w1, probe.left() + e, probe.right() + e);
      }
      if (!lemma3_member(probe, center)) {
        continue;
      }
      ++accepted;
      REQUIRE(probe.left() <= center.left());
      REQUIRE(probe.right() <= center.right());
      REQUIRE((probe.left() == center.left())
              == (probe.right() == center.right()));
    }
    CHECK(accepted >= 5000);
  }
}

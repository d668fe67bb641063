#include "ordmon/bicyclic.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "ordmon/error.hpp"
#include "text_cursor.hpp"

namespace ordmon {

  MonoidParameter::MonoidParameter(Ordinal alpha)
      : alpha_(std::move(alpha)), bound_() {
    if (alpha_.is_zero()) {
      throw DomainError("monoid parameter alpha must be at least 1");
    }
    bound_ = omega_pow(alpha_);
  }

  MonoidParameter MonoidParameter::omega_plus_one() {
    static MonoidParameter const p(add(Ordinal::omega(), Ordinal(1)));
    return p;
  }

  MonoidParameter MonoidParameter::classic() {
    static MonoidParameter const p(Ordinal(1));
    return p;
  }

  BicyclicElement::BicyclicElement(MonoidParameter context,
                                   Ordinal         left,
                                   Ordinal         right)
      : context_(std::move(context)),
        left_(std::move(left)),
        right_(std::move(right)) {
    if (!context_.admits(left_) || !context_.admits(right_)) {
      throw DomainError("(" + to_string(left_) + ", " + to_string(right_)
                        + ") is not an element of B_"
                        + to_string(context_.alpha()));
    }
  }

  BicyclicElement BicyclicElement::identity(MonoidParameter context) {
    return BicyclicElement(std::move(context), Ordinal(), Ordinal());
  }

  namespace {
    void check_same_context(BicyclicElement const& x,
                            BicyclicElement const& y) {
      if (!(x.context() == y.context())) {
        throw ContextMismatch("cannot combine elements of B_"
                              + to_string(x.context().alpha()) + " and B_"
                              + to_string(y.context().alpha()));
      }
    }
  }  // namespace

  BicyclicElement multiply(BicyclicElement const& x, BicyclicElement const& y) {
    check_same_context(x, y);
    Ordinal const& a = x.left();
    Ordinal const& b = x.right();
    Ordinal const& c = y.left();
    Ordinal const& d = y.right();
    if (b <= c) {
      return BicyclicElement(x.context(), a + (c - b), d);
    }
    return BicyclicElement(x.context(), a, d + (b - c));
  }

  BicyclicElement inverse(BicyclicElement const& x) {
    return BicyclicElement(x.context(), x.right(), x.left());
  }

  bool is_idempotent(BicyclicElement const& x) {
    return x.left() == x.right();
  }

  BicyclicElement embed(BicyclicElement const& x, MonoidParameter const& into) {
    if (into.alpha() < x.context().alpha()) {
      throw DomainError("cannot embed B_" + to_string(x.context().alpha())
                        + " into the smaller B_" + to_string(into.alpha()));
    }
    return BicyclicElement(into, x.left(), x.right());
  }

  bool lemma3_member(BicyclicElement const& probe,
                     BicyclicElement const& center) {
    check_same_context(probe, center);
    auto const& ctx = center.context();
    BicyclicElement const left_factor(ctx, Ordinal(), center.left());
    BicyclicElement const expected(ctx, Ordinal(), center.right());
    return multiply(left_factor, probe) == expected;
  }

  ClassicWord classic_word_product(ClassicWord const& x, ClassicWord const& y) {
    std::uint64_t const overlap = std::min(x.p_power, y.q_power);
    return ClassicWord{x.q_power + y.q_power - overlap,
                       x.p_power + y.p_power - overlap};
  }

  BicyclicElement classic_from_word(ClassicWord const& w) {
    return BicyclicElement(
        MonoidParameter::classic(), Ordinal(w.q_power), Ordinal(w.p_power));
  }

  ClassicWord classic_to_word(BicyclicElement const& x) {
    if (!(x.context() == MonoidParameter::classic())) {
      throw ContextMismatch("q^k p^l words only describe elements of B_1, not B_"
                            + to_string(x.context().alpha()));
    }
    auto k = x.left().to_uint();
    auto l = x.right().to_uint();
    if (!k || !l) {
      throw DomainError("word exponent exceeds 64 bits");
    }
    return ClassicWord{*k, *l};
  }

  BicyclicElement parse_element(std::string_view       text,
                                MonoidParameter const& context) {
    detail::TextCursor cur{text};
    cur.expect('(');
    Ordinal left = detail::parse_ordinal_prefix(cur);
    cur.expect(',');
    Ordinal right = detail::parse_ordinal_prefix(cur);
    cur.expect(')');
    cur.expect_end();
    return BicyclicElement(context, std::move(left), std::move(right));
  }

  std::string to_string(BicyclicElement const& x) {
    return "(" + to_string(x.left()) + ", " + to_string(x.right()) + ")";
  }

  std::ostream& operator<<(std::ostream& os, BicyclicElement const& x) {
    return os << to_string(x);
  }

}  // namespace ordmon

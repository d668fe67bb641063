#ifndef ORDMON_BICYCLIC_HPP_
#define ORDMON_BICYCLIC_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ordmon/ordinal.hpp"

namespace ordmon {

  //! The ordinal alpha >= 1 selecting the monoid B_alpha = w^alpha x w^alpha.
  class MonoidParameter {
   public:
    //! Throws DomainError if alpha is 0.
    explicit MonoidParameter(Ordinal alpha);

    //! alpha = w + 1, the monoid carrying the locally compact topology.
    static MonoidParameter omega_plus_one();

    //! alpha = 1, the classic bicyclic monoid.
    static MonoidParameter classic();

    Ordinal const& alpha() const noexcept {
      return alpha_;
    }

    //! w^alpha; every coordinate of an element is strictly below it.
    Ordinal const& bound() const noexcept {
      return bound_;
    }

    bool admits(Ordinal const& x) const {
      return x < bound_;
    }

    friend bool operator==(MonoidParameter const& p, MonoidParameter const& q) {
      return p.alpha_ == q.alpha_;
    }

   private:
    Ordinal alpha_;
    Ordinal bound_;
  };

  //! An element (left, right) of B_alpha.
  class BicyclicElement {
   public:
    //! Throws DomainError unless both coordinates are below w^alpha.
    BicyclicElement(MonoidParameter context, Ordinal left, Ordinal right);

    static BicyclicElement identity(MonoidParameter context);

    Ordinal const& left() const noexcept {
      return left_;
    }

    Ordinal const& right() const noexcept {
      return right_;
    }

    MonoidParameter const& context() const noexcept {
      return context_;
    }

    friend bool operator==(BicyclicElement const& x, BicyclicElement const& y) {
      return x.left_ == y.left_ && x.right_ == y.right_
             && x.context_ == y.context_;
    }

   private:
    MonoidParameter context_;
    Ordinal         left_;
    Ordinal         right_;
  };

  //! (a, b)(c, d) = (a + (c - b), d) if b <= c, and (a, d + (b - c))
  //! otherwise. Throws ContextMismatch for elements of different monoids.
  BicyclicElement multiply(BicyclicElement const& x, BicyclicElement const& y);

  inline BicyclicElement operator*(BicyclicElement const& x,
                                   BicyclicElement const& y) {
    return multiply(x, y);
  }

  //! (a, b) -> (b, a).
  BicyclicElement inverse(BicyclicElement const& x);

  bool is_idempotent(BicyclicElement const& x);

  //! Re-tags an element of B_beta as an element of B_alpha, beta <= alpha.
  //! Throws DomainError if the target monoid is smaller.
  BicyclicElement embed(BicyclicElement const& x, MonoidParameter const& into);

  //! Membership in V((a, b)) = { x : (0, a) x = (0, b) }, the clopen
  //! neighbourhood that controls every other point of B_alpha.
  bool lemma3_member(BicyclicElement const& probe,
                     BicyclicElement const& center);

  ////////////////////////////////////////////////////////////////////////
  // The classic bicyclic monoid B(p, q) with pq = 1
  ////////////////////////////////////////////////////////////////////////

  //! The word q^k p^l.
  struct ClassicWord {
    std::uint64_t q_power = 0;
    std::uint64_t p_power = 0;

    friend bool operator==(ClassicWord const&, ClassicWord const&) = default;
  };

  //! q^k p^l * q^m p^n = q^(k + m - min(l, m)) p^(l + n - min(l, m)).
  ClassicWord classic_word_product(ClassicWord const& x, ClassicWord const& y);

  //! q^k p^l -> (k, l) in B_1.
  BicyclicElement classic_from_word(ClassicWord const& w);

  //! Inverse of classic_from_word. Throws ContextMismatch outside B_1.
  ClassicWord classic_to_word(BicyclicElement const& x);

  ////////////////////////////////////////////////////////////////////////
  // Text form "(<ordinal>, <ordinal>)"
  ////////////////////////////////////////////////////////////////////////

  BicyclicElement parse_element(std::string_view text,
                                MonoidParameter const& context);

  std::string to_string(BicyclicElement const& x);

  std::ostream& operator<<(std::ostream& os, BicyclicElement const& x);

}  // namespace ordmon

#endif  // ORDMON_BICYCLIC_HPP_

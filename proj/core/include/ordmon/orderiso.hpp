#ifndef ORDMON_ORDERISO_HPP_
#define ORDMON_ORDERISO_HPP_

#include "ordmon/bicyclic.hpp"
#include "ordmon/ordinal.hpp"

namespace ordmon {

  //! The order isomorphism [a, w^alpha) -> [b, w^alpha) between principal
  //! upper sets of w^alpha.
  //!
  //! Such an isomorphism exists for all a, b < w^alpha and is unique, so it
  //! is stored by its two base points; apply() evaluates it pointwise as
  //! x -> b + (x - a).
  class UpperSetIso {
   public:
    //! Throws DomainError unless both base points are below w^alpha.
    UpperSetIso(MonoidParameter context, Ordinal source_base, Ordinal target_base);

    static UpperSetIso identity(MonoidParameter context);

    Ordinal const& source_base() const noexcept {
      return source_base_;
    }

    Ordinal const& target_base() const noexcept {
      return target_base_;
    }

    MonoidParameter const& context() const noexcept {
      return context_;
    }

    bool in_domain(Ordinal const& x) const {
      return source_base_ <= x && context_.admits(x);
    }

    bool in_image(Ordinal const& y) const {
      return target_base_ <= y && context_.admits(y);
    }

    friend bool operator==(UpperSetIso const&, UpperSetIso const&) = default;

   private:
    MonoidParameter context_;
    Ordinal         source_base_;
    Ordinal         target_base_;
  };

  //! f(x). Throws DomainError if x is outside [source_base, w^alpha).
  Ordinal apply(UpperSetIso const& f, Ordinal const& x);

  //! f^{-1}(y). Throws DomainError if y is outside [target_base, w^alpha).
  Ordinal preimage(UpperSetIso const& f, Ordinal const& y);

  //! The partial-map product "f, then g": defined on every x in dom f with
  //! f(x) in dom g, and equal to g(f(x)) there.
  UpperSetIso compose(UpperSetIso const& f, UpperSetIso const& g);

  //! (a, b) -> the isomorphism [a, w^alpha) -> [b, w^alpha).
  UpperSetIso represent(BicyclicElement const& x);

  BicyclicElement unrepresent(UpperSetIso const& f);

}  // namespace ordmon

#endif  // ORDMON_ORDERISO_HPP_

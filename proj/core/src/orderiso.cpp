#include "ordmon/orderiso.hpp"

#include <algorithm>
#include <utility>

#include "ordmon/error.hpp"

namespace ordmon {

  UpperSetIso::UpperSetIso(MonoidParameter context,
                           Ordinal         source_base,
                           Ordinal         target_base)
      : context_(std::move(context)),
        source_base_(std::move(source_base)),
        target_base_(std::move(target_base)) {
    if (!context_.admits(source_base_) || !context_.admits(target_base_)) {
      throw DomainError("upper set base outside w^"
                        + to_string(context_.alpha()));
    }
  }

  UpperSetIso UpperSetIso::identity(MonoidParameter context) {
    return UpperSetIso(std::move(context), Ordinal(), Ordinal());
  }

  Ordinal apply(UpperSetIso const& f, Ordinal const& x) {
    if (!f.in_domain(x)) {
      throw DomainError(to_string(x) + " is outside the domain ["
                        + to_string(f.source_base()) + ", w^"
                        + to_string(f.context().alpha()) + ")");
    }
    return f.target_base() + (x - f.source_base());
  }

  Ordinal preimage(UpperSetIso const& f, Ordinal const& y) {
    if (!f.in_image(y)) {
      throw DomainError(to_string(y) + " is outside the image ["
                        + to_string(f.target_base()) + ", w^"
                        + to_string(f.context().alpha()) + ")");
    }
    return f.source_base() + (y - f.target_base());
  }

  UpperSetIso compose(UpperSetIso const& f, UpperSetIso const& g) {
    if (!(f.context() == g.context())) {
      throw ContextMismatch("cannot compose isomorphisms of different ordinals");
    }
    // im f = [b, .) and dom g = [c, .) are both upper sets, so their
    // intersection is the upper set at max(b, c). The composite's domain is
    // its preimage under f, itself an upper set.
    Ordinal const& meet = std::max(f.target_base(), g.source_base());
    return UpperSetIso(f.context(), preimage(f, meet), apply(g, meet));
  }

  UpperSetIso represent(BicyclicElement const& x) {
    return UpperSetIso(x.context(), x.left(), x.right());
  }

  BicyclicElement unrepresent(UpperSetIso const& f) {
    return BicyclicElement(f.context(), f.source_base(), f.target_base());
  }

}  // namespace ordmon

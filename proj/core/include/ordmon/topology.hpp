#ifndef ORDMON_TOPOLOGY_HPP_
#define ORDMON_TOPOLOGY_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ordmon/bicyclic.hpp"
#include "ordmon/ordinal.hpp"

// The locally compact, non-discrete inverse semigroup topology on
// B_{w+1}: every point is isolated except the centers (n*w^w, m*w^w) with
// n, m >= 1, and a center has the neighbourhood base
//
//   U_k((n*w^w, m*w^w)) = { ((n-1)*w^w + w^t, (m-1)*w^w + w^t) : t > k }
//                         u { (n*w^w, m*w^w) },        t ranging over N.
//
// This header also hosts the classifier for points that are isolated in
// every Hausdorff semitopological semigroup topology on B_alpha.

namespace ordmon {

  ////////////////////////////////////////////////////////////////////////
  // Ordinals below w^(w+1)
  ////////////////////////////////////////////////////////////////////////

  //! x = head * w^w + tail with tail < w^w.
  struct OmegaOmegaSplit {
    std::uint64_t head = 0;
    Ordinal       tail;
  };

  //! Throws DomainError if x >= w^(w+1).
  OmegaOmegaSplit split_at_omega_omega(Ordinal const& x);

  //! n if x = n * w^w with n >= 1.
  std::optional<std::uint64_t> omega_omega_multiple(Ordinal const& x);

  //! The leading exponent of the part of x below w^w, or 0 if x is a pure
  //! multiple of w^w. Always finite.
  std::uint64_t tail_leading_exponent(Ordinal const& x);

  //! n * w^w + w^t (either summand may vanish when n = 0).
  Ordinal omega_omega_plus_power(std::uint64_t n, std::uint64_t t);

  ////////////////////////////////////////////////////////////////////////
  // Base neighbourhoods
  ////////////////////////////////////////////////////////////////////////

  class BasicNeighborhood {
   public:
    //! U_k((n*w^w, m*w^w)). Throws DomainError if n or m is 0.
    BasicNeighborhood(std::uint64_t center_n, std::uint64_t center_m, std::uint64_t k);

    std::uint64_t center_n() const noexcept {
      return n_;
    }

    std::uint64_t center_m() const noexcept {
      return m_;
    }

    std::uint64_t k() const noexcept {
      return k_;
    }

    BicyclicElement center() const;

    //! The member with parameter t; t > k is not checked.
    BicyclicElement member_at(std::uint64_t t) const;

    BasicNeighborhood with_k(std::uint64_t k) const {
      return BasicNeighborhood(n_, m_, k);
    }

    friend bool operator==(BasicNeighborhood const&, BasicNeighborhood const&) = default;

   private:
    std::uint64_t n_;
    std::uint64_t m_;
    std::uint64_t k_;
  };

  bool nbhd_member(BicyclicElement const& x, BasicNeighborhood const& U);

  //! The center followed by the members t = k+1, ..., k+count-1.
  std::vector<BicyclicElement> nbhd_enumerate(BasicNeighborhood const& U,
                                              std::size_t              count);

  //! The image of U under inversion: U_k((m*w^w, n*w^w)).
  BasicNeighborhood inv_nbhd(BasicNeighborhood const& U);

  //! The t for which x is the t-th non-center member of U_0 at its center,
  //! if x has that shape.
  std::optional<std::uint64_t> member_index(BicyclicElement const&   x,
                                            BasicNeighborhood const& U);

  //! Members with k < t <= j, i.e. U_k minus U_j. Throws DomainError if
  //! j < k. Its size is j - k, so every U_k is compact.
  std::vector<BicyclicElement> compactness_structure(BasicNeighborhood const& U,
                                                     std::uint64_t            j);

  BasicNeighborhood parse_neighborhood(std::string_view text);

  //! "U[k]((<n*w^w>, <m*w^w>))" with the centers in ordinal notation.
  std::string to_string(BasicNeighborhood const& U);

  std::ostream& operator<<(std::ostream& os, BasicNeighborhood const& U);

  ////////////////////////////////////////////////////////////////////////
  // Points of the topology
  ////////////////////////////////////////////////////////////////////////

  //! (n, m) if x = (n*w^w, m*w^w) with n, m >= 1.
  std::optional<std::pair<std::uint64_t, std::uint64_t>>
  tau_lc_center(BicyclicElement const& x);

  //! False exactly at the centers. Throws ContextMismatch outside B_{w+1}.
  bool is_isolated_tau_lc(BicyclicElement const& x);

  //! A base open set of the topology: a singleton or a U_k.
  using OpenBaseSet = std::variant<BicyclicElement, BasicNeighborhood>;

  bool contains(OpenBaseSet const& set, BicyclicElement const& x);

  //! The singleton for an isolated point, U_0 for a center.
  OpenBaseSet canonical_open_set(BicyclicElement const& x);

  //! Up to \p prefix elements of the set, center first.
  std::vector<BicyclicElement> enumerate(OpenBaseSet const& set,
                                         std::size_t        prefix);

  std::string to_string(OpenBaseSet const& set);

  struct Separation {
    OpenBaseSet first;
    OpenBaseSet second;
  };

  //! Disjoint base open sets around two distinct points. Throws DomainError
  //! if x == y.
  Separation hausdorff_separate(BicyclicElement const& x,
                                BicyclicElement const& y);

  //! No enumerated member of either set (up to \p prefix each) lies in the
  //! other one.
  bool disjoint_on_prefix(OpenBaseSet const& a,
                          OpenBaseSet const& b,
                          std::size_t        prefix = 50);

  ////////////////////////////////////////////////////////////////////////
  // Points isolated in every Hausdorff semitopological topology
  ////////////////////////////////////////////////////////////////////////

  enum class IsolationStatus { forced_isolated, not_forced };

  enum class IsolationRule {
    lemma2_zero_coordinate,
    corollary4_both_finite,
    lemma4_distinct_omega_powers,
    proposition6_nonlimit,
    lemma5_reduction
  };

  struct IsolationVerdict {
    IsolationStatus              status = IsolationStatus::not_forced;
    std::optional<IsolationRule> witness_rule;

    friend bool operator==(IsolationVerdict const&, IsolationVerdict const&) = default;
  };

  //! Decides whether the known sufficient conditions force (a, b) to be
  //! isolated in B_alpha, checked in this order:
  //!
  //!  1. a = 0 or b = 0;
  //!  2. a and b both finite;
  //!  3. a or b a successor;
  //!  4. the last CNF terms w^beta*n, w^gamma*m of a and b have
  //!     beta != gamma: (w^beta, w^gamma) is isolated and (a, b) is carried
  //!     onto it by (0, a*)(a, b)(b*, 0), where a* and b* drop one copy of
  //!     the last term. The rule is reported as the distinct-powers rule when
  //!     (a, b) already is (w^beta, w^gamma).
  //!
  //! not_forced means only that none of these rules applies.
  IsolationVerdict classify_forced_isolated(BicyclicElement const& x);

  std::string_view to_string(IsolationStatus s);
  std::string_view to_string(IsolationRule r);

  //! "forced_isolated <rule>" or "not_forced".
  std::string to_string(IsolationVerdict const& v);

}  // namespace ordmon

#endif  // ORDMON_TOPOLOGY_HPP_

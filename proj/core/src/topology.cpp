#include "ordmon/topology.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include "ordmon/error.hpp"
#include "text_cursor.hpp"

namespace ordmon {

  namespace {
    void require_tau_lc_context(BicyclicElement const& x) {
      if (!(x.context() == MonoidParameter::omega_plus_one())) {
        throw ContextMismatch("the topology lives on B_(w + 1), not B_"
                              + to_string(x.context().alpha()));
      }
    }

    std::uint64_t to_u64(Natural const& n) {
      if (n > std::numeric_limits<std::uint64_t>::max()) {
        throw DomainError("coefficient exceeds 64 bits");
      }
      return static_cast<std::uint64_t>(n);
    }
  }  // namespace

  OmegaOmegaSplit split_at_omega_omega(Ordinal const& x) {
    auto const ts = x.terms();
    if (ts.empty()) {
      return {};
    }
    auto const c = ts.front().exponent <=> Ordinal::omega();
    if (c > 0) {
      throw DomainError(to_string(x) + " is not below w^(w + 1)");
    }
    if (c < 0) {
      return {0, x};
    }
    return {to_u64(ts.front().coefficient),
            Ordinal::from_terms(std::vector<CnfTerm>(ts.begin() + 1, ts.end()))};
  }

  std::optional<std::uint64_t> omega_omega_multiple(Ordinal const& x) {
    auto const ts = x.terms();
    if (ts.size() != 1 || ts.front().exponent != Ordinal::omega()) {
      return std::nullopt;
    }
    return to_u64(ts.front().coefficient);
  }

  std::uint64_t tail_leading_exponent(Ordinal const& x) {
    auto const s = split_at_omega_omega(x);
    if (s.tail.is_zero()) {
      return 0;
    }
    return to_u64(s.tail.leading_term().exponent.finite_value());
  }

  Ordinal omega_omega_plus_power(std::uint64_t n, std::uint64_t t) {
    Ordinal const power = omega_pow(Ordinal(t));
    if (n == 0) {
      return power;
    }
    return monomial(Ordinal::omega(), n) + power;
  }

  ////////////////////////////////////////////////////////////////////////
  // BasicNeighborhood
  ////////////////////////////////////////////////////////////////////////

  BasicNeighborhood::BasicNeighborhood(std::uint64_t center_n,
                                       std::uint64_t center_m,
                                       std::uint64_t k)
      : n_(center_n), m_(center_m), k_(k) {
    if (n_ == 0 || m_ == 0) {
      throw DomainError("neighbourhood centers need n, m >= 1");
    }
  }

  BicyclicElement BasicNeighborhood::center() const {
    return BicyclicElement(MonoidParameter::omega_plus_one(),
                           monomial(Ordinal::omega(), n_),
                           monomial(Ordinal::omega(), m_));
  }

  BicyclicElement BasicNeighborhood::member_at(std::uint64_t t) const {
    return BicyclicElement(MonoidParameter::omega_plus_one(),
                           omega_omega_plus_power(n_ - 1, t),
                           omega_omega_plus_power(m_ - 1, t));
  }

  std::optional<std::uint64_t> member_index(BicyclicElement const&   x,
                                            BasicNeighborhood const& U) {
    require_tau_lc_context(x);
    auto const l = split_at_omega_omega(x.left());
    auto const r = split_at_omega_omega(x.right());
    if (l.head != U.center_n() - 1 || r.head != U.center_m() - 1) {
      return std::nullopt;
    }
    if (l.tail != r.tail || !is_additively_indecomposable(l.tail)) {
      return std::nullopt;
    }
    return to_u64(l.tail.leading_term().exponent.finite_value());
  }

  bool nbhd_member(BicyclicElement const& x, BasicNeighborhood const& U) {
    require_tau_lc_context(x);
    if (x == U.center()) {
      return true;
    }
    auto const t = member_index(x, U);
    return t.has_value() && *t > U.k();
  }

  std::vector<BicyclicElement> nbhd_enumerate(BasicNeighborhood const& U,
                                              std::size_t              count) {
    std::vector<BicyclicElement> out;
    if (count == 0) {
      return out;
    }
    out.reserve(count);
    out.push_back(U.center());
    for (std::uint64_t i = 1; i < count; ++i) {
      out.push_back(U.member_at(U.k() + i));
    }
    return out;
  }

  BasicNeighborhood inv_nbhd(BasicNeighborhood const& U) {
    return BasicNeighborhood(U.center_m(), U.center_n(), U.k());
  }

  std::vector<BicyclicElement> compactness_structure(BasicNeighborhood const& U,
                                                     std::uint64_t            j) {
    if (j < U.k()) {
      throw DomainError("compactness_structure needs j >= k");
    }
    std::vector<BicyclicElement> out;
    out.reserve(j - U.k());
    for (std::uint64_t t = U.k() + 1; t <= j; ++t) {
      out.push_back(U.member_at(t));
    }
    return out;
  }

  BasicNeighborhood parse_neighborhood(std::string_view text) {
    detail::TextCursor cur{text};
    cur.expect('U');
    cur.expect('[');
    cur.skip_ws();
    std::size_t const k_at = cur.pos;
    Ordinal const k = detail::parse_ordinal_prefix(cur);
    cur.expect(']');
    cur.expect('(');
    cur.expect('(');
    cur.skip_ws();
    std::size_t const n_at = cur.pos;
    Ordinal const left = detail::parse_ordinal_prefix(cur);
    cur.expect(',');
    cur.skip_ws();
    std::size_t const m_at = cur.pos;
    Ordinal const right = detail::parse_ordinal_prefix(cur);
    cur.expect(')');
    cur.expect(')');
    cur.expect_end();

    auto const kv = k.to_uint();
    if (!kv) {
      throw ParseError("neighbourhood index must be a natural number", k_at);
    }
    auto const n = omega_omega_multiple(left);
    if (!n) {
      throw ParseError("center coordinate must have the form w^w*n", n_at);
    }
    auto const m = omega_omega_multiple(right);
    if (!m) {
      throw ParseError("center coordinate must have the form w^w*m", m_at);
    }
    return BasicNeighborhood(*n, *m, *kv);
  }

  std::string to_string(BasicNeighborhood const& U) {
    std::ostringstream os;
    os << "U[" << U.k() << "]((" << monomial(Ordinal::omega(), U.center_n())
       << ", " << monomial(Ordinal::omega(), U.center_m()) << "))";
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, BasicNeighborhood const& U) {
    return os << to_string(U);
  }

  ////////////////////////////////////////////////////////////////////////
  // Points
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<std::uint64_t, std::uint64_t>>
  tau_lc_center(BicyclicElement const& x) {
    require_tau_lc_context(x);
    auto const n = omega_omega_multiple(x.left());
    auto const m = omega_omega_multiple(x.right());
    if (!n || !m) {
      return std::nullopt;
    }
    return std::pair{*n, *m};
  }

  bool is_isolated_tau_lc(BicyclicElement const& x) {
    return !tau_lc_center(x).has_value();
  }

  bool contains(OpenBaseSet const& set, BicyclicElement const& x) {
    if (auto const* point = std::get_if<BicyclicElement>(&set)) {
      return *point == x;
    }
    return nbhd_member(x, std::get<BasicNeighborhood>(set));
  }

  OpenBaseSet canonical_open_set(BicyclicElement const& x) {
    if (auto const c = tau_lc_center(x)) {
      return BasicNeighborhood(c->first, c->second, 0);
    }
    return x;
  }

  std::vector<BicyclicElement> enumerate(OpenBaseSet const& set,
                                         std::size_t        prefix) {
    if (auto const* point = std::get_if<BicyclicElement>(&set)) {
      if (prefix == 0) {
        return {};
      }
      return {*point};
    }
    return nbhd_enumerate(std::get<BasicNeighborhood>(set), prefix);
  }

  std::string to_string(OpenBaseSet const& set) {
    if (auto const* point = std::get_if<BicyclicElement>(&set)) {
      return "{" + to_string(*point) + "}";
    }
    return to_string(std::get<BasicNeighborhood>(set));
  }

  Separation hausdorff_separate(BicyclicElement const& x,
                                BicyclicElement const& y) {
    require_tau_lc_context(x);
    require_tau_lc_context(y);
    if (x == y) {
      throw DomainError("cannot separate a point from itself");
    }
    OpenBaseSet a = canonical_open_set(x);
    OpenBaseSet b = canonical_open_set(y);
    // Distinct centers have disjoint U_0's, since the non-center members
    // carry the (n - 1, m - 1) heads of their own center. Only an isolated
    // point lying inside the other's U_0 needs the index raised past it.
    auto shrink = [](OpenBaseSet& around, BicyclicElement const& other) {
      if (auto* U = std::get_if<BasicNeighborhood>(&around)) {
        if (auto const t = member_index(other, *U); t && *t > U->k()) {
          *U = U->with_k(*t);
        }
      }
    };
    shrink(a, y);
    shrink(b, x);
    return {std::move(a), std::move(b)};
  }

  bool disjoint_on_prefix(OpenBaseSet const& a,
                          OpenBaseSet const& b,
                          std::size_t        prefix) {
    for (auto const& x : enumerate(a, prefix)) {
      if (contains(b, x)) {
        return false;
      }
    }
    for (auto const& y : enumerate(b, prefix)) {
      if (contains(a, y)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Forced isolation
  ////////////////////////////////////////////////////////////////////////

  IsolationVerdict classify_forced_isolated(BicyclicElement const& x) {
    Ordinal const& a = x.left();
    Ordinal const& b = x.right();
    auto forced = [](IsolationRule r) {
      return IsolationVerdict{IsolationStatus::forced_isolated, r};
    };
    if (a.is_zero() || b.is_zero()) {
      return forced(IsolationRule::lemma2_zero_coordinate);
    }
    if (a.is_finite() && b.is_finite()) {
      return forced(IsolationRule::corollary4_both_finite);
    }
    if (!is_limit(a) || !is_limit(b)) {
      return forced(IsolationRule::proposition6_nonlimit);
    }
    Ordinal const& beta  = a.last_term().exponent;
    Ordinal const& gamma = b.last_term().exponent;
    if (beta != gamma) {
      if (is_additively_indecomposable(a) && is_additively_indecomposable(b)) {
        return forced(IsolationRule::lemma4_distinct_omega_powers);
      }
      return forced(IsolationRule::lemma5_reduction);
    }
    return {IsolationStatus::not_forced, std::nullopt};
  }

  std::string_view to_string(IsolationStatus s) {
    switch (s) {
      case IsolationStatus::forced_isolated:
        return "forced_isolated";
      case IsolationStatus::not_forced:
        return "not_forced";
    }
    return "?";
  }

  std::string_view to_string(IsolationRule r) {
    switch (r) {
      case IsolationRule::lemma2_zero_coordinate:
        return "lemma2";
      case IsolationRule::corollary4_both_finite:
        return "corollary4";
      case IsolationRule::lemma4_distinct_omega_powers:
        return "lemma4";
      case IsolationRule::proposition6_nonlimit:
        return "proposition6";
      case IsolationRule::lemma5_reduction:
        return "lemma5";
    }
    return "?";
  }

  std::string to_string(IsolationVerdict const& v) {
    std::string out(to_string(v.status));
    if (v.witness_rule) {
      out += ' ';
      out += to_string(*v.witness_rule);
    }
    return out;
  }

}  // namespace ordmon

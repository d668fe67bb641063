#ifndef ORDMON_ORDINAL_HPP_
#define ORDMON_ORDINAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordmon {

  //! Arbitrary precision natural number used for CNF coefficients.
  using Natural = boost::multiprecision::cpp_int;

  struct CnfTerm;

  //! An ordinal below epsilon_0 in hereditary Cantor normal form.
  //!
  //! The value is the sum of omega^exponent * coefficient over its terms,
  //! with exponents strictly decreasing and every coefficient at least 1.
  //! The empty term list is 0. Exponents are themselves Ordinals.
  //!
  //! Ordinals are immutable; copies share their term storage.
  class Ordinal {
   public:
    //! Zero.
    Ordinal() noexcept = default;

    //! The finite ordinal \p n.
    explicit Ordinal(std::uint64_t n);

    static Ordinal finite(Natural const& n);
    static Ordinal omega();

    //! Builds the CNF of a multiset of terms: sorts by exponent, merges equal
    //! exponents by summing coefficients. Throws DomainError on a zero
    //! coefficient.
    static Ordinal from_terms(std::vector<CnfTerm> terms);

    std::span<CnfTerm const> terms() const noexcept;

    bool is_zero() const noexcept {
      return terms_ == nullptr;
    }

    bool is_finite() const noexcept;

    //! The value of a finite ordinal. Throws DomainError if infinite.
    Natural const& finite_value() const;

    //! The value of a finite ordinal if it fits, otherwise nullopt.
    std::optional<std::uint64_t> to_uint() const;

    CnfTerm const& leading_term() const;
    CnfTerm const& last_term() const;

    friend bool operator==(Ordinal const& x, Ordinal const& y);
    friend std::strong_ordering operator<=>(Ordinal const& x,
                                            Ordinal const& y);

   private:
    explicit Ordinal(std::vector<CnfTerm>&& normalized);

    std::shared_ptr<std::vector<CnfTerm> const> terms_;

    friend Ordinal add(Ordinal const&, Ordinal const&);
    friend Ordinal subtract(Ordinal const&, Ordinal const&);
    friend Ordinal omega_pow(Ordinal const&);
    friend Ordinal monomial(Ordinal const&, Natural const&);
  };

  //! The summand omega^exponent * coefficient.
  struct CnfTerm {
    Ordinal exponent;
    Natural coefficient;

    friend bool operator==(CnfTerm const&, CnfTerm const&) = default;
  };

  inline std::span<CnfTerm const> Ordinal::terms() const noexcept {
    if (terms_ == nullptr) {
      return {};
    }
    return {terms_->data(), terms_->size()};
  }

  std::strong_ordering compare(Ordinal const& x, Ordinal const& y);

  //! Ordinal sum x + y.
  Ordinal add(Ordinal const& x, Ordinal const& y);

  //! The unique c with y + c = x. Throws DomainError if y > x.
  Ordinal subtract(Ordinal const& x, Ordinal const& y);

  //! omega^e.
  Ordinal omega_pow(Ordinal const& e);

  //! omega^e * c for c >= 1.
  Ordinal monomial(Ordinal const& e, Natural const& c);

  //! Nonzero and not a successor. Zero counts as non-limit.
  bool is_limit(Ordinal const& x);

  //! Exactly the powers omega^e (the "prime" ordinals).
  bool is_additively_indecomposable(Ordinal const& x);

  std::vector<CnfTerm> cnf_terms(Ordinal const& x);

  inline Ordinal operator+(Ordinal const& x, Ordinal const& y) {
    return add(x, y);
  }

  inline Ordinal operator-(Ordinal const& x, Ordinal const& y) {
    return subtract(x, y);
  }

  //! Parses the ASCII notation, e.g. "w^w*2 + w^3 + 5" or "w^(w+1)".
  //! '+' is ordinal addition, so "1 + w" parses to w.
  Ordinal parse_ordinal(std::string_view text);

  //! Normalized ASCII form; parse_ordinal(to_string(x)) == x.
  std::string to_string(Ordinal const& x);

  std::ostream& operator<<(std::ostream& os, Ordinal const& x);

  namespace literals {
    inline Ordinal operator""_ord(char const* text, std::size_t len) {
      return parse_ordinal(std::string_view(text, len));
    }
  }  // namespace literals

}  // namespace ordmon

#endif  // ORDMON_ORDINAL_HPP_

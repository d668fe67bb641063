#include "ordmon/ordinal.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "ordmon/error.hpp"
#include "text_cursor.hpp"

namespace ordmon {

  Ordinal::Ordinal(std::vector<CnfTerm>&& normalized) {
    if (!normalized.empty()) {
      terms_ = std::make_shared<std::vector<CnfTerm> const>(
          std::move(normalized));
    }
  }

  Ordinal::Ordinal(std::uint64_t n) {
    if (n != 0) {
      terms_ = std::make_shared<std::vector<CnfTerm> const>(
          std::vector<CnfTerm>{CnfTerm{Ordinal(), Natural(n)}});
    }
  }

  Ordinal Ordinal::finite(Natural const& n) {
    if (n < 0) {
      throw DomainError("negative value is not an ordinal");
    }
    if (n == 0) {
      return Ordinal();
    }
    return Ordinal(std::vector<CnfTerm>{CnfTerm{Ordinal(), n}});
  }

  Ordinal Ordinal::omega() {
    static Ordinal const w = omega_pow(Ordinal(1));
    return w;
  }

  Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
    for (auto const& t : terms) {
      if (t.coefficient <= 0) {
        throw DomainError("CNF coefficient must be positive");
      }
    }
    std::stable_sort(terms.begin(),
                     terms.end(),
                     [](CnfTerm const& a, CnfTerm const& b) {
                       return a.exponent > b.exponent;
                     });
    std::vector<CnfTerm> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().exponent == t.exponent) {
        merged.back().coefficient += t.coefficient;
      } else {
        merged.push_back(std::move(t));
      }
    }
    return Ordinal(std::move(merged));
  }

  bool Ordinal::is_finite() const noexcept {
    return terms_ == nullptr
           || (terms_->size() == 1 && (*terms_)[0].exponent.is_zero());
  }

  Natural const& Ordinal::finite_value() const {
    static Natural const zero = 0;
    if (!is_finite()) {
      throw DomainError("ordinal " + to_string(*this) + " is not finite");
    }
    return terms_ == nullptr ? zero : (*terms_)[0].coefficient;
  }

  std::optional<std::uint64_t> Ordinal::to_uint() const {
    if (!is_finite()) {
      return std::nullopt;
    }
    Natural const& v = finite_value();
    if (v > std::numeric_limits<std::uint64_t>::max()) {
      return std::nullopt;
    }
    return static_cast<std::uint64_t>(v);
  }

  CnfTerm const& Ordinal::leading_term() const {
    if (terms_ == nullptr) {
      throw DomainError("0 has no CNF terms");
    }
    return terms_->front();
  }

  CnfTerm const& Ordinal::last_term() const {
    if (terms_ == nullptr) {
      throw DomainError("0 has no CNF terms");
    }
    return terms_->back();
  }

  bool operator==(Ordinal const& x, Ordinal const& y) {
    if (x.terms_ == y.terms_) {
      return true;
    }
    if (x.terms_ == nullptr || y.terms_ == nullptr) {
      return false;
    }
    return *x.terms_ == *y.terms_;
  }

  std::strong_ordering operator<=>(Ordinal const& x, Ordinal const& y) {
    if (x.terms_ == y.terms_) {
      return std::strong_ordering::equal;
    }
    auto const xs = x.terms();
    auto const ys = y.terms();
    std::size_t const n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = xs[i].exponent <=> ys[i].exponent; c != 0) {
        return c;
      }
      if (xs[i].coefficient != ys[i].coefficient) {
        return xs[i].coefficient < ys[i].coefficient
                   ? std::strong_ordering::less
                   : std::strong_ordering::greater;
      }
    }
    return xs.size() <=> ys.size();
  }

  std::strong_ordering compare(Ordinal const& x, Ordinal const& y) {
    return x <=> y;
  }

  Ordinal add(Ordinal const& x, Ordinal const& y) {
    if (y.is_zero()) {
      return x;
    }
    if (x.is_zero()) {
      return y;
    }
    auto const xs = x.terms();
    auto const ys = y.terms();
    Ordinal const& lead = ys.front().exponent;

    std::vector<CnfTerm> out;
    out.reserve(xs.size() + ys.size());
    std::size_t i = 0;
    for (; i < xs.size() && xs[i].exponent > lead; ++i) {
      out.push_back(xs[i]);
    }
    if (i < xs.size() && xs[i].exponent == lead) {
      out.push_back(CnfTerm{lead, xs[i].coefficient + ys.front().coefficient});
    } else {
      out.push_back(ys.front());
    }
    out.insert(out.end(), ys.begin() + 1, ys.end());
    return Ordinal(std::move(out));
  }

  Ordinal subtract(Ordinal const& x, Ordinal const& y) {
    auto const xs = x.terms();
    auto const ys = y.terms();
    std::size_t i = 0;
    while (i < xs.size() && i < ys.size() && xs[i] == ys[i]) {
      ++i;
    }
    if (i == ys.size()) {
      // y is a prefix of x
      return Ordinal(std::vector<CnfTerm>(xs.begin() + i, xs.end()));
    }
    if (i == xs.size()) {
      throw DomainError("subtraction undefined: " + to_string(y) + " > "
                        + to_string(x));
    }
    auto const c = xs[i].exponent <=> ys[i].exponent;
    if (c > 0) {
      return Ordinal(std::vector<CnfTerm>(xs.begin() + i, xs.end()));
    }
    if (c == 0 && xs[i].coefficient > ys[i].coefficient) {
      std::vector<CnfTerm> out;
      out.reserve(xs.size() - i);
      out.push_back(
          CnfTerm{xs[i].exponent, xs[i].coefficient - ys[i].coefficient});
      out.insert(out.end(), xs.begin() + i + 1, xs.end());
      return Ordinal(std::move(out));
    }
    throw DomainError("subtraction undefined: " + to_string(y) + " > "
                      + to_string(x));
  }

  Ordinal omega_pow(Ordinal const& e) {
    return Ordinal(std::vector<CnfTerm>{CnfTerm{e, 1}});
  }

  Ordinal monomial(Ordinal const& e, Natural const& c) {
    if (c <= 0) {
      throw DomainError("CNF coefficient must be positive");
    }
    return Ordinal(std::vector<CnfTerm>{CnfTerm{e, c}});
  }

  bool is_limit(Ordinal const& x) {
    return !x.is_zero() && !x.last_term().exponent.is_zero();
  }

  bool is_additively_indecomposable(Ordinal const& x) {
    auto const ts = x.terms();
    return ts.size() == 1 && ts.front().coefficient == 1;
  }

  std::vector<CnfTerm> cnf_terms(Ordinal const& x) {
    auto const ts = x.terms();
    return {ts.begin(), ts.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_omega(Ordinal const& x) {
      auto const ts = x.terms();
      return ts.size() == 1 && ts[0].coefficient == 1
             && ts[0].exponent == Ordinal(1);
    }

    void print_to(std::ostream& os, Ordinal const& x);

    void print_atom(std::ostream& os, Ordinal const& e) {
      if (e.is_finite()) {
        os << e.finite_value();
      } else if (is_omega(e)) {
        os << 'w';
      } else {
        os << '(';
        print_to(os, e);
        os << ')';
      }
    }

    void print_to(std::ostream& os, Ordinal const& x) {
      if (x.is_zero()) {
        os << '0';
        return;
      }
      bool first = true;
      for (auto const& t : x.terms()) {
        if (!first) {
          os << " + ";
        }
        first = false;
        if (t.exponent.is_zero()) {
          os << t.coefficient;
          continue;
        }
        os << 'w';
        if (t.exponent != Ordinal(1)) {
          os << '^';
          print_atom(os, t.exponent);
        }
        if (t.coefficient != 1) {
          os << '*' << t.coefficient;
        }
      }
    }
  }  // namespace

  std::string to_string(Ordinal const& x) {
    std::ostringstream os;
    print_to(os, x);
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Ordinal const& x) {
    print_to(os, x);
    return os;
  }

  namespace detail {

    namespace {
      Natural parse_nat(TextCursor& cur) {
        cur.skip_ws();
        std::size_t const start = cur.pos;
        Natural value = 0;
        while (!cur.at_end() && cur.peek() >= '0' && cur.peek() <= '9') {
          value = value * 10 + (cur.peek() - '0');
          ++cur.pos;
        }
        if (cur.pos == start) {
          throw ParseError("expected a natural number", start);
        }
        return value;
      }

      bool next_is_digit(TextCursor& cur) {
        cur.skip_ws();
        return !cur.at_end() && cur.peek() >= '0' && cur.peek() <= '9';
      }

      Ordinal parse_atom(TextCursor& cur) {
        cur.skip_ws();
        if (cur.at_end()) {
          throw ParseError("expected an exponent", cur.pos);
        }
        if (cur.accept('w')) {
          return Ordinal::omega();
        }
        if (cur.accept('(')) {
          Ordinal inner = parse_ordinal_prefix(cur);
          cur.expect(')');
          return inner;
        }
        if (next_is_digit(cur)) {
          return Ordinal::finite(parse_nat(cur));
        }
        throw ParseError(std::string("unexpected '") + cur.peek() + "'",
                         cur.pos);
      }

      Natural parse_coefficient(TextCursor& cur) {
        cur.skip_ws();
        std::size_t const at = cur.pos;
        Natural c = parse_nat(cur);
        if (c == 0) {
          throw ParseError("zero coefficient", at);
        }
        return c;
      }

      // Returns nullopt for a bare "0" term.
      std::optional<Ordinal> parse_term(TextCursor& cur) {
        cur.skip_ws();
        if (cur.at_end()) {
          throw ParseError("expected a term", cur.pos);
        }
        if (next_is_digit(cur)) {
          Natural n = parse_nat(cur);
          if (n == 0) {
            return std::nullopt;
          }
          return Ordinal::finite(n);
        }
        if (!cur.accept('w')) {
          throw ParseError(std::string("unexpected '") + cur.peek() + "'",
                           cur.pos);
        }
        Ordinal exponent(1);
        if (cur.accept('^')) {
          exponent = parse_atom(cur);
        }
        Natural coefficient = 1;
        if (cur.accept('*')) {
          coefficient = parse_coefficient(cur);
        }
        return monomial(exponent, coefficient);
      }
    }  // namespace

    Ordinal parse_ordinal_prefix(TextCursor& cur) {
      cur.skip_ws();
      std::size_t const start = cur.pos;
      std::optional<Ordinal> first = parse_term(cur);
      if (!first) {
        cur.skip_ws();
        if (!cur.at_end() && cur.peek() == '+') {
          throw ParseError("zero coefficient", start);
        }
        return Ordinal();
      }
      Ordinal result = *first;
      while (cur.accept('+')) {
        cur.skip_ws();
        std::size_t const at = cur.pos;
        std::optional<Ordinal> t = parse_term(cur);
        if (!t) {
          throw ParseError("zero coefficient", at);
        }
        result = add(result, *t);
      }
      return result;
    }

  }  // namespace detail

  Ordinal parse_ordinal(std::string_view text) {
    detail::TextCursor cur{text};
    Ordinal x = detail::parse_ordinal_prefix(cur);
    cur.expect_end();
    return x;
  }

}  // namespace ordmon

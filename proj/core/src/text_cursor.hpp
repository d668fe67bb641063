#ifndef ORDMON_SRC_TEXT_CURSOR_HPP_
#define ORDMON_SRC_TEXT_CURSOR_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "ordmon/error.hpp"
#include "ordmon/ordinal.hpp"

namespace ordmon::detail {

  // Shared scanner for the ordinal, element and neighbourhood notations.
  // Whitespace is insignificant everywhere.
  struct TextCursor {
    std::string_view text;
    std::size_t      pos = 0;

    bool at_end() const noexcept {
      return pos >= text.size();
    }

    char peek() const noexcept {
      return text[pos];
    }

    void skip_ws() noexcept {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
        ++pos;
      }
    }

    bool accept(char c) {
      skip_ws();
      if (!at_end() && peek() == c) {
        ++pos;
        return true;
      }
      return false;
    }

    bool accept(std::string_view word) {
      skip_ws();
      if (text.substr(pos, word.size()) == word) {
        pos += word.size();
        return true;
      }
      return false;
    }

    void expect(char c) {
      if (!accept(c)) {
        throw ParseError(std::string("expected '") + c + "'", pos);
      }
    }

    void expect_end() {
      skip_ws();
      if (!at_end()) {
        throw ParseError(std::string("unexpected '") + peek() + "'", pos);
      }
    }
  };

  // Parses an ordinal starting at the cursor and stops at the first
  // character that cannot continue it.
  Ordinal parse_ordinal_prefix(TextCursor& cur);

}  // namespace ordmon::detail

#endif  // ORDMON_SRC_TEXT_CURSOR_HPP_

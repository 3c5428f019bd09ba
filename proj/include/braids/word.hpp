#pragma once

// Shared text grammar for every word type in the library.
//
//   s3  s3'       sigma_3 and its inverse
//   x2            singular generator x_2
//   a(4,2) a'(4,2) band generator a_42 and its inverse
//   b(4,2)        singular band generator b_42 (never inverted)
//   e2            partial identity missing strand 2
//   t  t'         type-B generator tau and its inverse
//   n=5           header fixing the strand count
//
// Tokens are separated by whitespace.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braids {

enum class Gen { sigma, x, a, b, eps, tau };

struct Token {
  Gen gen = Gen::sigma;
  int i = 0;     // sigma/x/eps index, or t of a(t,s)/b(t,s)
  int j = 0;     // s of a(t,s)/b(t,s)
  int sign = 1;  // +1 or -1

  friend bool operator==(Token const&, Token const&) = default;
};

struct ParsedWord {
  std::optional<int> n;
  std::vector<Token> tokens;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& msg, std::string token, std::size_t column)
      : std::runtime_error(msg + " at column " + std::to_string(column + 1)
                           + ": '" + token + "'"),
        token_(std::move(token)),
        column_(column) {}

  std::string const& token() const noexcept { return token_; }
  // zero-based character offset of the token in the input
  std::size_t column() const noexcept { return column_; }

 private:
  std::string token_;
  std::size_t column_;
};

ParsedWord parse_word(std::string_view text);

std::string format_token(Token const& tok);
std::string format_tokens(std::vector<Token> const& toks);

// Smallest strand count that can host every token, at least 1.
int min_strands(std::vector<Token> const& toks);

}  // namespace braids

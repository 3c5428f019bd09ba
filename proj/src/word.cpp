#include "braids/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace braids {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) {
    return false;
  }
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

Token parse_token(std::string_view tok, std::size_t col) {
  auto fail = [&](std::string const& why) -> Token {
    throw ParseError(why, std::string(tok), col);
  };
  Token out;
  char head = tok.front();
  std::string_view rest = tok.substr(1);
  bool inverted = false;
  if (!rest.empty() && rest.front() == '\'') {
    inverted = true;
    rest.remove_prefix(1);
  } else if (!rest.empty() && rest.back() == '\'') {
    inverted = true;
    rest.remove_suffix(1);
  }
  out.sign = inverted ? -1 : 1;
  switch (head) {
    case 's':
    case 'x':
    case 'e': {
      out.gen = head == 's' ? Gen::sigma : head == 'x' ? Gen::x : Gen::eps;
      if (!parse_int(rest, out.i) || out.i < 1) {
        return fail("expected a positive index");
      }
      if (inverted && out.gen != Gen::sigma) {
        return fail("generator has no inverse");
      }
      return out;
    }
    case 't': {
      out.gen = Gen::tau;
      if (!rest.empty()) {
        return fail("unexpected characters after t");
      }
      return out;
    }
    case 'a':
    case 'b': {
      out.gen = head == 'a' ? Gen::a : Gen::b;
      if (inverted && out.gen == Gen::b) {
        return fail("b generators have no inverse");
      }
      if (rest.size() < 5 || rest.front() != '(' || rest.back() != ')') {
        return fail("expected (t,s)");
      }
      rest = rest.substr(1, rest.size() - 2);
      auto comma = rest.find(',');
      if (comma == std::string_view::npos
          || !parse_int(rest.substr(0, comma), out.i)
          || !parse_int(rest.substr(comma + 1), out.j)) {
        return fail("expected (t,s)");
      }
      if (!(1 <= out.j && out.j < out.i)) {
        return fail("band indices need 1 <= s < t");
      }
      return out;
    }
    default:
      return fail("unknown generator");
  }
}

}  // namespace

ParsedWord parse_word(std::string_view text) {
  ParsedWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size()
           && !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string_view tok = text.substr(pos, end - pos);
    if (tok.starts_with("n=")) {
      int n = 0;
      if (!parse_int(tok.substr(2), n) || n < 0) {
        throw ParseError("bad strand count", std::string(tok), pos);
      }
      if (out.n || !out.tokens.empty()) {
        throw ParseError("header must come first", std::string(tok), pos);
      }
      out.n = n;
    } else {
      out.tokens.push_back(parse_token(tok, pos));
    }
    pos = end;
  }
  return out;
}

std::string format_token(Token const& tok) {
  std::string inv = tok.sign < 0 ? "'" : "";
  switch (tok.gen) {
    case Gen::sigma:
      return "s" + std::to_string(tok.i) + inv;
    case Gen::x:
      return "x" + std::to_string(tok.i);
    case Gen::eps:
      return "e" + std::to_string(tok.i);
    case Gen::tau:
      return "t" + inv;
    case Gen::a:
    case Gen::b:
      return std::string(tok.gen == Gen::a ? "a" : "b") + inv + "("
             + std::to_string(tok.i) + "," + std::to_string(tok.j) + ")";
  }
  return {};
}

std::string format_tokens(std::vector<Token> const& toks) {
  std::string out;
  for (auto const& t : toks) {
    if (!out.empty()) {
      out += ' ';
    }
    out += format_token(t);
  }
  return out;
}

int min_strands(std::vector<Token> const& toks) {
  int n = 1;
  for (auto const& t : toks) {
    switch (t.gen) {
      case Gen::sigma:
      case Gen::x:
        n = std::max(n, t.i + 1);
        break;
      case Gen::eps:
      case Gen::a:
      case Gen::b:
        n = std::max(n, t.i);
        break;
      case Gen::tau:
        break;
    }
  }
  return n;
}

}  // namespace braids

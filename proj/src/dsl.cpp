#include "stabset/dsl.hpp"

#include <cctype>
#include <vector>

namespace stabset {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void err(const std::string& message) { throw ParseError(message, pos); }

  void expect(char c) {
    skip_space();
    if (pos >= s.size() || s[pos] != c)
      err(std::string("expected '") + c + "'");
    ++pos;
  }

  bool peek(char c) {
    skip_space();
    return pos < s.size() && s[pos] == c;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) err("expected a generator name");
    return s.substr(start, pos - start);
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (s[start] == '-' && pos == start + 1)) {
      pos = start;
      err("expected integer");
    }
    return std::stoll(s.substr(start, pos - start));
  }

  // Integer, decimal like 0.25, or fraction a/b; exact in all three forms.
  Rational rational() {
    const Int whole = integer();
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      const std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) err("expected digits after decimal point");
      Int num = whole;
      Int den = 1;
      for (std::size_t i = start; i < pos; ++i) {
        num = num * 10 + (s[i] - '0');
        den *= 10;
      }
      return Rational(num) / Rational(den);
    }
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      const Int den = integer();
      if (den == 0) err("zero denominator");
      return Rational(whole) / Rational(den);
    }
    return Rational(whole);
  }

  std::vector<std::int64_t> integer_list_bracketed() {
    expect('[');
    std::vector<std::int64_t> items;
    if (!peek(']')) {
      items.push_back(integer());
      while (peek(',')) {
        ++pos;
        items.push_back(integer());
      }
    }
    expect(']');
    return items;
  }

  Graph expr() {
    const std::size_t name_at = pos;
    const std::string name = identifier();
    expect('(');
    if (name == "cycle" || name == "complete" || name == "path" ||
        name == "empty") {
      const std::int64_t k = integer();
      expect(')');
      if (name == "cycle") return Graph::cycle(static_cast<int>(k));
      if (name == "complete") return Graph::complete(static_cast<int>(k));
      if (name == "path") return Graph::path(static_cast<int>(k));
      return Graph::empty(static_cast<int>(k));
    }
    if (name == "complete_multipartite") {
      std::vector<int> parts{static_cast<int>(integer())};
      while (peek(',')) {
        ++pos;
        parts.push_back(static_cast<int>(integer()));
      }
      expect(')');
      return Graph::complete_multipartite(parts);
    }
    if (name == "random") {
      const std::int64_t n = integer();
      expect(',');
      const Rational p = rational();
      expect(',');
      const std::int64_t seed = integer();
      expect(')');
      return Graph::random(static_cast<int>(n), p,
                           static_cast<std::uint64_t>(seed));
    }
    if (name == "line" || name == "complement") {
      Graph g = expr();
      expect(')');
      return name == "line" ? g.line_graph() : g.complemented();
    }
    if (name == "join" || name == "union") {
      Graph a = expr();
      expect(',');
      Graph b = expr();
      expect(')');
      return name == "join" ? Graph::join(a, b) : Graph::disjoint_union(a, b);
    }
    if (name == "induced") {
      Graph g = expr();
      expect(',');
      const auto raw = integer_list_bracketed();
      expect(')');
      std::vector<int> vertices(raw.begin(), raw.end());
      return g.induced(vertices);
    }
    pos = name_at;
    err("unknown generator '" + name + "'");
  }
};

}  // namespace

Graph parse_dsl(const std::string& expr) {
  Parser p{expr};
  Graph g = p.expr();
  p.skip_space();
  if (p.pos != expr.size()) p.err("trailing input");
  return g;
}

Graph build_graph(const std::string& text) {
  // An edge-list document opens with its "n m" header; a DSL expression
  // opens with a generator name.
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Graph::from_edge_list(text);
    return parse_dsl(text);
  }
  throw ParseError("empty input", 0);
}

}  // namespace stabset

#include <cctype>
#include <sstream>

#include "nullkit/cli.hpp"

namespace nullkit::cli {

namespace {

constexpr std::uint32_t kMaxExponent = 1u << 20;

[[noreturn]] void parse_error(std::size_t line, std::size_t col, const std::string& what) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

// Recursive descent over one line:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' unary) | power)*     ('*' may be omitted before a
//                                             variable or '(')
//   unary := '-' unary | '+' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | '(' expr ')'
class ExprParser {
 public:
  ExprParser(std::string_view s, const RingPtr& ring, std::size_t line, std::size_t col0)
      : s_(s), ring_(ring), line_(line), col0_(col0) {}

  MultiPoly parse() {
    skip();
    if (pos_ == s_.size()) error("empty expression");
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { parse_error(line_, col0_ + pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly r = term();
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  MultiPoly term() {
    MultiPoly r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || is_ident_start(s_[pos_]))) {
        r *= power();
      } else {
        return r;
      }
    }
  }

  MultiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a non-negative integer exponent");
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 9 || std::stoul(digits) > kMaxExponent) {
      pos_ = start;
      error("exponent too large");
    }
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  MultiPoly atom() {
    skip();
    if (pos_ == s_.size()) error("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!eat(')')) error("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(std::string(s_.substr(start, pos_ - start)));
      return MultiPoly::constant(ring_, ring_->field()->from_mpz(v));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      const std::size_t idx = ring_->index_of(name);
      if (idx == ring_->nvars()) {
        fail(ErrorKind::UnknownVariable, "line " + std::to_string(line_) + ", column " +
                                             std::to_string(col0_ + start) + ": '" + name + "' is not declared");
      }
      return MultiPoly::variable(ring_, idx);
    }
    error(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;
  std::size_t col;  // 1-based column of the first character of `text`
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    std::string_view body = trim(raw);
    if (!body.empty()) out.push_back(Line{number, lead + 1, body});
    if (nl == std::string_view::npos) break;
  }
  return out;
}

// Strips `keyword` and the whitespace after it; false if `s` does not start with it.
bool strip_keyword(std::string_view& s, std::string_view keyword, std::size_t& col) {
  if (s.substr(0, keyword.size()) != keyword) return false;
  if (s.size() > keyword.size() && !std::isspace(static_cast<unsigned char>(s[keyword.size()]))) return false;
  std::string_view rest = s.substr(keyword.size());
  const std::size_t before = rest.size();
  rest = trim(rest);
  col += keyword.size() + (before - rest.size());
  s = rest;
  return true;
}

FieldPtr parse_field(const Line& l) {
  std::string_view s = l.text;
  std::size_t col = l.col;
  if (!strip_keyword(s, "field", col)) parse_error(l.number, l.col, "expected 'field GF(p)' or 'field QQ'");
  if (s == "QQ") return Field::rationals();
  if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
    std::string_view digits = s.substr(3, s.size() - 4);
    bool ok = !digits.empty() && digits.size() <= 19;
    for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (!ok) parse_error(l.number, col + 3, "expected a prime in GF(p)");
    const std::uint64_t p = std::stoull(std::string(digits));
    return Field::prime(p);
  }
  parse_error(l.number, col, "unknown field '" + std::string(s) + "'");
}

RingPtr parse_vars(const Line& l, const FieldPtr& field) {
  std::string_view s = l.text;
  std::size_t col = l.col;
  if (!strip_keyword(s, "vars", col)) parse_error(l.number, l.col, "expected 'vars' followed by variable names");
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    if (i == s.size()) break;
    if (!is_ident_start(s[i])) parse_error(l.number, col + i, "variable names match [A-Za-z][A-Za-z0-9_]*");
    const std::size_t start = i;
    while (i < s.size() && is_ident_char(s[i])) ++i;
    if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',') {
      parse_error(l.number, col + i, "variable names match [A-Za-z][A-Za-z0-9_]*");
    }
    names.emplace_back(s.substr(start, i - start));
  }
  if (names.empty()) parse_error(l.number, col, "no variables declared");
  return Ring::make(field, std::move(names));
}

}  // namespace

Ideal parse_ideal(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) parse_error(1, 1, "missing 'field' line");
  const FieldPtr field = parse_field(lines[0]);
  if (lines.size() < 2) parse_error(lines[0].number + 1, 1, "missing 'vars' line");
  const RingPtr ring = parse_vars(lines[1], field);
  std::vector<MultiPoly> gens;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    gens.push_back(ExprParser(lines[i].text, ring, lines[i].number, lines[i].col).parse());
  }
  return Ideal(ring, std::move(gens));
}

MultiPoly parse_poly(std::string_view text, const RingPtr& ring) {
  return ExprParser(text, ring, 1, 1).parse();
}

std::string render_ideal(const Ideal& ideal) {
  std::ostringstream os;
  os << "field " << ideal.ring()->field()->name() << "\n";
  os << "vars ";
  const auto& vars = ideal.ring()->vars();
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : "") << vars[i];
  os << "\n";
  for (const MultiPoly& g : ideal.generators()) os << g.to_string() << "\n";
  return os.str();
}

}  // namespace nullkit::cli

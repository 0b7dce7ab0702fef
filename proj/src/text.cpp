#include "addsep/text.hpp"

#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace addsep {

namespace {

// Exponents of (t, x, y).
using Exps = std::array<int, 3>;
using ZPoly = std::map<Exps, std::uint64_t>;

constexpr int kT = 0, kX = 1, kY = 2;
constexpr int kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, std::uint32_t p, std::array<bool, 3> allowed, std::string t_note)
      : s_(text), p_(p), allowed_(allowed), t_note_(std::move(t_note)) {}

  ZPoly parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty input");
    ZPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse \"" + std::string(s_) + "\" at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void add_into(ZPoly& a, const ZPoly& b, bool negate) const {
    for (const auto& [e, c] : b) {
      auto& slot = a[e];
      slot = (slot + (negate ? (p_ - c) % p_ : c)) % p_;
      if (slot == 0) a.erase(e);
    }
  }

  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    ZPoly r;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        const Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        if (e[0] > kMaxExponent || e[1] > kMaxExponent || e[2] > kMaxExponent) {
          throw ParseError("exponent too large in \"" + std::string(s_) + "\"");
        }
        auto& slot = r[e];
        slot = (slot + ca * cb) % p_;
        if (slot == 0) r.erase(e);
      }
    }
    return r;
  }

  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (++digits > 18) fail("integer literal too long");
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
    }
    return v;
  }

  ZPoly expr() {
    ZPoly r;
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    add_into(r, term(), negate);
    for (;;) {
      if (peek('+')) {
        ++pos_;
        add_into(r, term(), false);
      } else if (peek('-')) {
        ++pos_;
        add_into(r, term(), true);
      } else {
        return r;
      }
    }
  }

  ZPoly term() {
    ZPoly r = factor();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) return r;
      const char c = s_[pos_];
      if (c == '*') {
        ++pos_;
        r = mul(r, factor());
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
        r = mul(r, factor());
      } else {
        return r;
      }
    }
  }

  ZPoly factor() {
    ZPoly base = primary();
    if (!peek('^')) return base;
    ++pos_;
    const std::uint64_t e = integer();
    if (e > kMaxExponent) fail("exponent too large");
    ZPoly r{{Exps{0, 0, 0}, 1 % p_}};
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  ZPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer() % p_;
      ZPoly r;
      if (v != 0) r[Exps{0, 0, 0}] = v;
      return r;
    }
    if (c == '(') {
      ++pos_;
      ZPoly r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const char v = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      int idx = -1;
      if (v == 't') idx = kT;
      if (v == 'x') idx = kX;
      if (v == 'y') idx = kY;
      if (idx < 0 || !allowed_[static_cast<std::size_t>(idx)]) {
        if (idx == kT && !t_note_.empty()) fail(t_note_);
        fail(std::string("unexpected variable '") + c + "'");
      }
      ++pos_;
      Exps e{0, 0, 0};
      e[static_cast<std::size_t>(idx)] = 1;
      return ZPoly{{e, 1 % p_}};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::uint32_t p_;
  std::array<bool, 3> allowed_;
  std::string t_note_;
};

std::string t_note(const Field& f) {
  if (f.degree() > 1) return {};
  return "t is not defined over the prime field " + f.name();
}

// Groups terms by (x, y) exponent and folds the t-part into field values.
std::map<std::pair<int, int>, Value> to_field(const Field& f, const ZPoly& z) {
  std::map<std::pair<int, int>, std::vector<std::uint32_t>> tparts;
  for (const auto& [e, c] : z) {
    auto& v = tparts[{e[kX], e[kY]}];
    if (v.size() <= static_cast<std::size_t>(e[kT])) v.resize(static_cast<std::size_t>(e[kT]) + 1, 0);
    v[static_cast<std::size_t>(e[kT])] = static_cast<std::uint32_t>(c);
  }
  std::map<std::pair<int, int>, Value> out;
  for (const auto& [xy, v] : tparts) {
    const Value val = f.from_coeffs(v);
    if (val != 0) out[xy] = val;
  }
  return out;
}

std::string term_string(const Elem& c, const std::string& mono) {
  if (mono.empty()) return to_string(c);
  if (c.is_one()) return mono;
  const std::string cs = to_string(c);
  if (cs.find('+') != std::string::npos) return "(" + cs + ")*" + mono;
  return cs + "*" + mono;
}

std::string power(char var, int e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

Elem parse_elem(const Field& field, std::string_view text) {
  Parser parser(text, field.characteristic(), {field.degree() > 1, false, false}, t_note(field));
  const auto m = to_field(field, parser.parse());
  auto it = m.find({0, 0});
  return Elem(field, it == m.end() ? 0 : it->second);
}

std::vector<Elem> parse_elem_list(const Field& field, std::string_view text) {
  std::vector<Elem> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_elem(field, text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

UniPoly parse_unipoly(const Field& field, std::string_view text) {
  Parser parser(text, field.characteristic(), {field.degree() > 1, true, false}, t_note(field));
  const auto m = to_field(field, parser.parse());
  std::vector<Value> c;
  for (const auto& [xy, v] : m) {
    const auto i = static_cast<std::size_t>(xy.first);
    if (c.size() <= i) c.resize(i + 1, 0);
    c[i] = v;
  }
  return UniPoly(field, std::move(c));
}

BiPoly parse_bipoly(const Field& field, std::string_view text) {
  Parser parser(text, field.characteristic(), {field.degree() > 1, true, true}, t_note(field));
  BiPoly r(field);
  for (const auto& [xy, v] : to_field(field, parser.parse())) r.add_term({xy.first, xy.second}, v);
  return r;
}

std::vector<std::uint32_t> parse_modulus(std::uint32_t p, std::string_view text) {
  if (p < 2) throw ParseError("invalid characteristic");
  Parser parser(text, p, {true, false, false}, {});
  const ZPoly z = parser.parse();
  std::vector<std::uint32_t> c;
  for (const auto& [e, v] : z) {
    const auto i = static_cast<std::size_t>(e[kT]);
    if (c.size() <= i) c.resize(i + 1, 0);
    c[i] = static_cast<std::uint32_t>(v);
  }
  if (c.size() < 2) throw ParseError("modulus \"" + std::string(text) + "\" must have degree at least 1");
  if (c.back() != 1) throw ParseError("modulus \"" + std::string(text) + "\" must be monic");
  return c;
}

std::string to_string(const Elem& e) {
  const auto c = e.coeffs();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += power('t', static_cast<int>(i));
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const UniPoly& a, char var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i] == 0) continue;
    if (!out.empty()) out += "+";
    out += term_string(a.coeff(i), power(var, static_cast<int>(i)));
  }
  return out;
}

std::string to_string(const BiPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    if (!out.empty()) out += "+";
    std::string mono = power('x', m.x);
    if (m.y > 0) mono += (mono.empty() ? "" : "*") + power('y', m.y);
    out += term_string(Elem(a.field(), c), mono);
  }
  return out;
}

}  // namespace addsep

#include "addsep/bipoly.hpp"

#include <algorithm>

namespace addsep {

BiPoly::BiPoly(Field field, Terms terms) : field_(std::move(field)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

BiPoly BiPoly::constant(const Elem& c) { return monomial(c, {0, 0}); }

BiPoly BiPoly::monomial(const Elem& c, Monomial m) {
  BiPoly r(c.field());
  r.add_term(m, c.value());
  return r;
}

BiPoly BiPoly::in_x(const UniPoly& a) {
  BiPoly r(a.field());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) r.add_term({static_cast<int>(i), 0}, a.coeffs()[i]);
  return r;
}

BiPoly BiPoly::in_y(const UniPoly& a) {
  BiPoly r(a.field());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) r.add_term({0, static_cast<int>(i)}, a.coeffs()[i]);
  return r;
}

Elem BiPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return Elem(field_, it == terms_.end() ? 0 : it->second);
}

int BiPoly::deg_x() const {
  if (terms_.empty()) return kZeroDegree;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

int BiPoly::deg_y() const {
  if (terms_.empty()) return kZeroDegree;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y);
  return d;
}

Monomial BiPoly::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

Elem BiPoly::leading_coeff() const {
  if (terms_.empty()) return Elem::zero(field_);
  return Elem(field_, terms_.begin()->second);
}

Elem BiPoly::eval(const Elem& x, const Elem& y) const {
  require_same_field(field_, x.field());
  require_same_field(field_, y.field());
  Value acc = 0;
  for (const auto& [m, c] : terms_) {
    acc = field_.add(acc, field_.mul(c, field_.mul(field_.pow(x.value(), m.x), field_.pow(y.value(), m.y))));
  }
  return Elem(field_, acc);
}

void BiPoly::add_term(Monomial m, Value c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.neg(c));
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field_, b.field_);
  BiPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field_, b.field_);
  const auto& f = a.field_;
  BiPoly r(f);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.x + mb.x, ma.y + mb.y}, f.mul(ca, cb));
  }
  return r;
}

BiPoly scale(const BiPoly& a, const Elem& s) {
  require_same_field(a.field(), s.field());
  BiPoly::Terms t;
  for (const auto& [m, c] : a.terms()) t.emplace_hint(t.end(), m, a.field().mul(c, s.value()));
  return BiPoly(a.field(), std::move(t));
}

BiPoly pow(const BiPoly& a, unsigned n) {
  BiPoly r = BiPoly::constant(Elem::one(a.field()));
  for (unsigned i = 0; i < n; ++i) r = r * a;
  return r;
}

BiPoly monic(const BiPoly& a) {
  if (a.is_zero()) return a;
  const Elem lc = a.leading_coeff();
  if (lc.is_one()) return a;
  return scale(a, lc.inv());
}

BiPoly swap_variables(const BiPoly& a) {
  BiPoly::Terms t;
  for (const auto& [m, c] : a.terms()) t.emplace(Monomial{m.y, m.x}, c);
  return BiPoly(a.field(), std::move(t));
}

BiPoly substitute_squares(const BiPoly& b, const Elem& c) {
  require_same_field(b.field(), c.field());
  const auto& f = b.field();
  BiPoly::Terms t;
  for (const auto& [m, v] : b.terms()) t.emplace(Monomial{2 * m.x, 2 * m.y}, f.mul(v, f.pow(c.value(), m.y)));
  return BiPoly(f, std::move(t));
}

std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& q) {
  require_same_field(p.field(), q.field());
  if (q.is_zero()) throw DivisionByZeroError("bivariate division by zero");
  const auto& f = p.field();
  if (p.is_zero()) return BiPoly(f);
  const int dx = p.deg_x(), dy = p.deg_y();
  const int qx = q.deg_x(), qy = q.deg_y();
  if (qx > dx || qy > dy) return std::nullopt;

  const int width = dy + 1;
  std::vector<Value> rem(static_cast<std::size_t>((dx + 1) * width), 0);
  for (const auto& [m, c] : p.terms()) rem[static_cast<std::size_t>(m.x * width + m.y)] = c;

  const Monomial lead = q.leading_monomial();
  const Value lead_inv = f.inv(q.leading_coeff().value());
  std::vector<std::pair<Monomial, Value>> divisor(q.terms().begin(), q.terms().end());

  BiPoly::Terms quot;
  for (int t = p.total_degree(); t >= 0; --t) {
    for (int x = std::min(dx, t); x >= std::max(0, t - dy); --x) {
      const int y = t - x;
      const Value c = rem[static_cast<std::size_t>(x * width + y)];
      if (c == 0) continue;
      const int sx = x - lead.x, sy = y - lead.y;
      if (sx < 0 || sy < 0 || sx > dx - qx || sy > dy - qy) return std::nullopt;
      const Value coef = f.mul(c, lead_inv);
      quot.emplace(Monomial{sx, sy}, coef);
      const Value ncoef = f.neg(coef);
      for (const auto& [m, v] : divisor) {
        auto& slot = rem[static_cast<std::size_t>((m.x + sx) * width + m.y + sy)];
        slot = f.add(slot, f.mul(ncoef, v));
      }
    }
  }
  return BiPoly(f, std::move(quot));
}

bool canonical_less(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field(), b.field());
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return grlex_less(ia->first, ib->first);
  }
  if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
  const auto& f = a.field();
  for (ia = a.terms().begin(), ib = b.terms().begin(); ia != a.terms().end(); ++ia, ++ib) {
    if (ia->second != ib->second) return f.lex_less(ia->second, ib->second);
  }
  return false;
}

}  // namespace addsep

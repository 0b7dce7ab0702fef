#include "addsep/unipoly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "addsep/rng.hpp"

namespace addsep {

UniPoly::UniPoly(Field field, std::vector<Value> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto v : c_) {
    if (v >= field_.order()) throw std::out_of_range("raw value outside the field");
  }
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Elem& c) { return UniPoly(c.field(), {c.value()}); }

UniPoly UniPoly::monomial(const Elem& c, std::size_t exponent) {
  std::vector<Value> v(exponent + 1, 0);
  v[exponent] = c.value();
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::from_ints(const Field& field, std::initializer_list<long long> coeffs) {
  std::vector<Value> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return UniPoly(field, std::move(v));
}

Elem UniPoly::leading() const {
  if (c_.empty()) return Elem::zero(field_);
  return Elem(field_, c_.back());
}

bool UniPoly::is_monic() const { return !c_.empty() && c_.back() == field_.from_int(1); }

Value UniPoly::eval(Value x) const {
  Value r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
  return r;
}

Elem UniPoly::operator()(const Elem& x) const {
  require_same_field(field_, x.field());
  return Elem(field_, eval(x.value()));
}

UniPoly UniPoly::operator-() const {
  std::vector<Value> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.neg(c_[i]);
  return UniPoly(field_, std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field_, b.field_);
  const auto& f = a.field_;
  std::vector<Value> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.raw(i), b.raw(i));
  return UniPoly(f, std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field_, b.field_);
  const auto& f = a.field_;
  std::vector<Value> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.raw(i), b.raw(i));
  return UniPoly(f, std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  const auto& f = a.field_;
  std::vector<Value> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const Value ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] != 0) v[i + j] = f.add(v[i + j], f.mul(ai, b.c_[j]));
    }
  }
  return UniPoly(f, std::move(v));
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divrem(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divrem(a, b).second; }

UniPoly scale(const UniPoly& a, const Elem& s) {
  require_same_field(a.field(), s.field());
  const auto& f = a.field();
  std::vector<Value> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.mul(a.coeffs()[i], s.value());
  return UniPoly(f, std::move(v));
}

UniPoly shift(const UniPoly& a, std::size_t n) {
  if (a.is_zero()) return a;
  std::vector<Value> v(n, 0);
  v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
  return UniPoly(a.field(), std::move(v));
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  const auto& f = a.field();
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<Value> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Value lead_inv = f.inv(bc.back());
  std::vector<Value> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    const Value c = f.mul(r[i], lead_inv);
    q[i - db] = c;
    if (c == 0) continue;
    const Value nc = f.neg(c);
    for (std::size_t j = 0; j <= db; ++j) {
      if (bc[j] != 0) r[i - db + j] = f.add(r[i - db + j], f.mul(nc, bc[j]));
    }
  }
  r.resize(db);
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly derivative(const UniPoly& a) {
  const auto& f = a.field();
  if (a.degree() < 1) return UniPoly(f);
  std::vector<Value> v(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    v[i - 1] = f.mul(f.from_int(static_cast<long long>(i)), a.coeffs()[i]);
  }
  return UniPoly(f, std::move(v));
}

UniPoly compose(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field(), b.field());
  UniPoly r(a.field());
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    r = r * b + UniPoly(a.field(), {a.coeffs()[i]});
  }
  return r;
}

UniPoly monic(const UniPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.leading().inv());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& mod) {
  const auto& f = mod.field();
  UniPoly r = UniPoly(f, {f.from_int(1)}) % mod;
  base = base % mod;
  for (; e; e >>= 1) {
    if (e & 1) r = (r * base) % mod;
    if (e > 1) base = (base * base) % mod;
  }
  return r;
}

bool is_squarefree(const UniPoly& a) {
  if (a.degree() < 1) return true;
  return gcd(a, derivative(a)).degree() == 0;
}

bool canonical_less(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field(), b.field());
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& f = a.field();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto ra = f.lex_rank(a.coeffs()[i]);
    const auto rb = f.lex_rank(b.coeffs()[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

namespace {

// Coefficient-wise p-th root of a polynomial whose derivative vanishes.
UniPoly pth_root(const UniPoly& a) {
  const auto& f = a.field();
  const std::size_t p = f.characteristic();
  std::vector<Value> v((a.coeffs().size() + p - 1) / p, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) v[i / p] = f.pth_root(a.coeffs()[i]);
  return UniPoly(f, std::move(v));
}

void sqf_into(const UniPoly& a, int scale_mult, std::vector<UniFactor>& out) {
  const auto& f = a.field();
  const UniPoly one(f, {f.from_int(1)});
  UniPoly c = gcd(a, derivative(a));
  UniPoly w = a / c;
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({monic(fac), i * scale_mult});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    sqf_into(pth_root(c), scale_mult * static_cast<int>(f.characteristic()), out);
  }
}

UniPoly random_below(const Field& f, int degree, Rng& rng) {
  std::vector<Value> v(static_cast<std::size_t>(degree));
  for (auto& x : v) x = static_cast<Value>(rng.below(f.order()));
  return UniPoly(f, std::move(v));
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<UniPoly, unsigned>> distinct_degree(const UniPoly& a) {
  const auto& f = a.field();
  std::vector<std::pair<UniPoly, unsigned>> out;
  const UniPoly x = UniPoly::x(f);
  UniPoly rest = a;
  UniPoly h = x % a;
  for (unsigned i = 1; rest.degree() >= 2 * static_cast<int>(i); ++i) {
    h = powmod(h, f.order(), a);
    UniPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      rest = rest / g;
      out.emplace_back(std::move(g), i);
    }
  }
  if (rest.degree() > 0) {
    const auto d = static_cast<unsigned>(rest.degree());
    out.emplace_back(std::move(rest), d);
  }
  return out;
}

// Splits a monic squarefree product of irreducibles of degree d.
void equal_degree(const UniPoly& g, unsigned d, Rng& rng, std::vector<UniPoly>& out) {
  const int n = g.degree();
  if (n == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const auto& f = g.field();
  const UniPoly one(f, {f.from_int(1)});
  for (;;) {
    UniPoly r = random_below(f, n, rng);
    if (r.degree() < 1) continue;
    // r * r^q * ... * r^{q^{d-1}}, then the (q-1)/2 power.
    UniPoly s = r, t = r;
    for (unsigned i = 1; i < d; ++i) {
      t = powmod(t, f.order(), g);
      s = (s * t) % g;
    }
    UniPoly w = powmod(s, (f.order() - 1) / 2, g) - one;
    if (w.is_zero()) continue;
    UniPoly h = gcd(g, w);
    if (h.degree() > 0 && h.degree() < n) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<UniFactor> squarefree_decomposition(const UniPoly& a) {
  if (a.degree() < 1) throw PreconditionError("squarefree decomposition of a constant");
  std::vector<UniFactor> out;
  sqf_into(monic(a), 1, out);
  return out;
}

std::vector<UniFactor> factor(const UniPoly& a, std::uint64_t seed) {
  if (a.degree() < 1) throw PreconditionError("cannot factor a constant polynomial");
  Rng rng(seed);
  std::vector<UniFactor> out;
  for (const auto& part : squarefree_decomposition(a)) {
    for (const auto& [block, d] : distinct_degree(part.poly)) {
      std::vector<UniPoly> irr;
      equal_degree(block, d, rng, irr);
      for (auto& g : irr) out.push_back({std::move(g), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const UniFactor& x, const UniFactor& y) { return canonical_less(x.poly, y.poly); });
  // Parts of the squarefree decomposition are coprime, but merge anyway.
  std::vector<UniFactor> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().poly == e.poly) {
      merged.back().multiplicity += e.multiplicity;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return merged;
}

std::vector<Elem> roots(const UniPoly& a, std::uint64_t seed) {
  if (a.is_zero()) throw PreconditionError("roots of the zero polynomial");
  const auto& f = a.field();
  std::vector<Elem> out;
  if (a.degree() < 1) return out;
  const UniPoly m = monic(a);
  const UniPoly x = UniPoly::x(f);
  const UniPoly g = gcd(m, powmod(x, f.order(), m) - x);
  if (g.degree() < 1) return out;
  Rng rng(seed);
  std::vector<UniPoly> lin;
  equal_degree(g, 1, rng, lin);
  for (const auto& l : lin) out.push_back(-l.coeff(0));
  std::sort(out.begin(), out.end(), [](const Elem& u, const Elem& v) { return lex_less(u, v); });
  return out;
}

Elem Embedding::operator()(const Elem& e) const {
  require_same_field(e.field(), from_);
  return Elem(to_, table_[e.value()]);
}

const Embedding& canonical_embedding(const Field& from, unsigned d) {
  using Key = std::tuple<std::uint32_t, std::vector<std::uint32_t>, unsigned>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<Embedding>> cache;
  const Key key{from.characteristic(), from.modulus(), d};
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  const Field to = from.extension(d);
  std::vector<Value> table(from.order());
  if (from.degree() == 1) {
    for (Value v = 0; v < from.order(); ++v) table[v] = to.from_int(v);
  } else {
    std::vector<Value> m;
    for (auto c : from.modulus()) m.push_back(to.from_int(c));
    const auto rs = roots(UniPoly(to, std::move(m)));
    const Value theta = rs.front().value();
    for (Value v = 0; v < from.order(); ++v) {
      const auto c = from.coeffs(v);
      Value acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = to.add(to.mul(acc, theta), to.from_int(c[i]));
      table[v] = acc;
    }
  }
  auto emb = std::make_unique<Embedding>(from, to, std::move(table));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(emb));
  return *it->second;
}

UniPoly lift(const UniPoly& a, const Embedding& e) {
  require_same_field(a.field(), e.from());
  std::vector<Value> v;
  v.reserve(a.coeffs().size());
  for (auto c : a.coeffs()) v.push_back(e.map(c));
  return UniPoly(e.to(), std::move(v));
}

std::vector<Elem> roots_in_extension(const UniPoly& a, unsigned d) {
  if (d == 0) throw PreconditionError("extension degree must be at least 1");
  if (a.degree() < 1) throw PreconditionError("roots of a constant polynomial");
  if (d == 1) return roots(a);
  return roots(lift(a, canonical_embedding(a.field(), d)));
}

}  // namespace addsep

#include "addsep/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace addsep {

namespace {

using ZpPoly = std::vector<std::uint32_t>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t zp_inv(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and small.
  std::uint64_t r = 1, b = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// a mod m, m monic.
void zp_reduce(ZpPoly& a, const ZpPoly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i < dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
    }
    a.pop_back();
    trim(a);
  }
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  zp_reduce(r, m, p);
  return r;
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& m, std::uint32_t p) {
  ZpPoly r{1};
  zp_reduce(base, m, p);
  for (; e; e >>= 1) {
    if (e & 1) r = zp_mulmod(r, base, m, p);
    base = zp_mulmod(base, base, m, p);
  }
  return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic.
    const std::uint64_t inv = zp_inv(b.back(), p);
    for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
    zp_reduce(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv = zp_inv(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

ZpPoly digits(Value v, std::uint32_t p, unsigned k) {
  ZpPoly d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

Value undigits(const ZpPoly& d, std::uint32_t p) {
  Value v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

std::shared_ptr<const detail::FieldTables> build_tables(std::uint32_t p, ZpPoly modulus,
                                                        bool canonical) {
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->k = static_cast<unsigned>(modulus.size() - 1);
  t->modulus = std::move(modulus);
  t->canonical = canonical;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < t->k; ++i) q *= p;
  t->q = static_cast<std::uint32_t>(q);

  const auto& m = t->modulus;
  const auto factors = prime_factors(q - 1);
  Value g = 0;
  for (Value cand = 1; cand < q; ++cand) {
    ZpPoly c = digits(cand, p, t->k);
    trim(c);
    bool primitive = true;
    for (auto r : factors) {
      ZpPoly w = zp_powmod(c, (q - 1) / r, m, p);
      if (w.size() == 1 && w[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }

  t->exp.assign(2 * (q - 1), 0);
  t->log.assign(q, -1);
  ZpPoly gd = digits(g, p, t->k);
  trim(gd);
  ZpPoly cur{1};
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    ZpPoly full = cur;
    full.resize(t->k, 0);
    const Value v = undigits(full, p);
    t->exp[i] = v;
    t->exp[i + q - 1] = v;
    t->log[v] = static_cast<std::int32_t>(i);
    cur = zp_mulmod(cur, gd, m, p);
  }

  if (t->k > 1) {
    t->zech.assign(q - 1, -1);
    for (std::uint32_t n = 0; n < q - 1; ++n) {
      const Value v = t->exp[n];
      const Value c0 = v % p;
      const Value w = v - c0 + (c0 + 1) % p;
      t->zech[n] = w == 0 ? -1 : t->log[w];
    }
  }

  t->rank.assign(q, 0);
  for (Value v = 0; v < q; ++v) {
    const ZpPoly d = digits(v, p, t->k);
    std::uint32_t r = 0;
    for (unsigned i = 0; i < t->k; ++i) r = r * p + d[i];
    t->rank[v] = r;
  }
  return t;
}

void check_characteristic(std::uint32_t p) {
  if (p == 2) {
    throw PreconditionError(
        "characteristic 2 is not supported: the field must have odd characteristic p > 2");
  }
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, ZpPoly>, std::shared_ptr<const detail::FieldTables>> by_modulus;
  std::map<std::pair<std::uint32_t, unsigned>, ZpPoly> canonical_modulus;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic) {
  ZpPoly m(monic.begin(), monic.end());
  trim(m);
  if (m.size() < 2 || m.back() != 1) return false;
  const std::size_t k = m.size() - 1;
  const ZpPoly x{0, 1};
  ZpPoly h = x;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    h = zp_powmod(h, p, m, p);
    ZpPoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    const ZpPoly g = zp_gcd(m, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned k) {
  if (k == 0) throw PreconditionError("extension degree must be at least 1");
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    ZpPoly cand(k + 1, 0);
    std::uint64_t v = n;
    for (unsigned i = 0; i < k; ++i) {
      cand[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    cand[k] = 1;
    if (is_irreducible_mod_p(p, cand)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field Field::gf(std::uint32_t p, unsigned k) {
  check_characteristic(p);
  if (k == 0) throw PreconditionError("extension degree k must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw GuardrailError("field order " + std::to_string(p) + "^" + std::to_string(k) +
                           " exceeds the table limit " + std::to_string(kMaxFieldOrder));
    }
  }
  auto& reg = registry();
  ZpPoly modulus;
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.canonical_modulus.find({p, k});
    if (it != reg.canonical_modulus.end()) modulus = it->second;
  }
  if (modulus.empty()) {
    modulus = find_irreducible(p, k);
    std::lock_guard lock(reg.mu);
    reg.canonical_modulus.emplace(std::make_pair(p, k), modulus);
  }
  return with_modulus(p, std::move(modulus));
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  check_characteristic(p);
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2) throw PreconditionError("modulus must have degree at least 1");
  if (modulus.back() != 1) throw PreconditionError("modulus must be monic");
  const auto k = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw GuardrailError("field order exceeds the table limit");
  }
  auto& reg = registry();
  const auto key = std::make_pair(p, modulus);
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.by_modulus.find(key);
    if (it != reg.by_modulus.end()) return Field(it->second);
  }
  if (!is_irreducible_mod_p(p, modulus)) {
    throw PreconditionError("modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  bool canonical = false;
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.canonical_modulus.find({p, k});
    if (it != reg.canonical_modulus.end()) canonical = it->second == modulus;
  }
  if (!canonical) canonical = find_irreducible(p, k) == modulus;
  auto tables = build_tables(p, modulus, canonical);
  std::lock_guard lock(reg.mu);
  auto [it, inserted] = reg.by_modulus.emplace(key, std::move(tables));
  return Field(it->second);
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << characteristic();
  if (degree() > 1) os << "^" << degree();
  os << ")";
  return os.str();
}

Value Field::pow(Value a, std::uint64_t e) const {
  Value r = from_int(1);
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

Value Field::pth_root(Value a) const {
  for (unsigned i = 1; i < degree(); ++i) a = frobenius(a);
  return a;
}

Value Field::from_int(long long n) const {
  const auto p = static_cast<long long>(characteristic());
  long long r = n % p;
  if (r < 0) r += p;
  return static_cast<Value>(r);
}

Value Field::from_coeffs(std::span<const std::uint32_t> c) const {
  const auto p = characteristic();
  ZpPoly a(c.begin(), c.end());
  for (auto& x : a) x %= p;
  zp_reduce(a, t_->modulus, p);
  a.resize(degree(), 0);
  return undigits(a, p);
}

std::vector<std::uint32_t> Field::coeffs(Value a) const { return digits(a, characteristic(), degree()); }

Value Field::generator() const {
  if (degree() == 1) return 0;
  return characteristic();
}

std::uint32_t Field::log(Value a) const {
  if (a == 0) throw DivisionByZeroError("log of zero");
  return static_cast<std::uint32_t>(t_->log[a]);
}

Elem::Elem(Field field, Value value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_.order()) throw std::out_of_range("raw value outside the field");
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatchError();
}

Elem operator+(const Elem& a, const Elem& b) {
  require_same_field(a.field_, b.field_);
  return Elem(a.field_, a.field_.add(a.value_, b.value_));
}

Elem operator-(const Elem& a, const Elem& b) {
  require_same_field(a.field_, b.field_);
  return Elem(a.field_, a.field_.sub(a.value_, b.value_));
}

Elem operator*(const Elem& a, const Elem& b) {
  require_same_field(a.field_, b.field_);
  return Elem(a.field_, a.field_.mul(a.value_, b.value_));
}

Elem operator/(const Elem& a, const Elem& b) {
  require_same_field(a.field_, b.field_);
  return Elem(a.field_, a.field_.div(a.value_, b.value_));
}

bool lex_less(const Elem& a, const Elem& b) {
  require_same_field(a.field(), b.field());
  return a.field().lex_less(a.value(), b.value());
}

bool is_square(const Elem& c) {
  if (c.is_zero()) throw PreconditionError("is_square: zero has no quadratic character");
  const auto q = c.field().order();
  return c.pow((q - 1) / 2).is_one();
}

Elem sqrt(const Elem& c) {
  if (c.is_zero()) throw PreconditionError("sqrt: argument is zero");
  if (!is_square(c)) throw PreconditionError("sqrt: argument is not a square");
  const Field& f = c.field();
  const Value one = f.from_int(1);

  // Tonelli-Shanks over GF(q): q - 1 = 2^s * odd.
  std::uint64_t odd = f.order() - 1;
  unsigned s = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  Value z = 0;
  for (Value v = 1; v < f.order(); ++v) {
    if (f.pow(v, (f.order() - 1) / 2) != one) {
      z = v;
      break;
    }
  }
  Value m = s;
  Value cc = f.pow(z, odd);
  Value t = f.pow(c.value(), odd);
  Value r = f.pow(c.value(), (odd + 1) / 2);
  while (t != one) {
    Value i = 0;
    Value tt = t;
    while (tt != one) {
      tt = f.mul(tt, tt);
      ++i;
    }
    Value b = cc;
    for (Value j = 0; j + 1 < m - i; ++j) b = f.mul(b, b);
    m = i;
    cc = f.mul(b, b);
    t = f.mul(t, cc);
    r = f.mul(r, b);
  }
  const Value other = f.neg(r);
  return Elem(f, f.lex_less(other, r) ? other : r);
}

}  // namespace addsep

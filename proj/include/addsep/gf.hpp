#pragma once

#include <cstdint>
#include <memory>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "addsep/error.hpp"

namespace addsep {

// Raw field value. An element of GF(p^k) with representative polynomial
// c_0 + c_1 t + ... + c_{k-1} t^{k-1} is stored as the integer
// sum c_i p^i. Raw values are only meaningful together with their Field.
using Value = std::uint32_t;

// Largest field order for which lookup tables are built.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

namespace detail {

struct FieldTables {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, degree k, constant term first
  bool canonical = false;

  std::vector<Value> exp;          // exp[i] = g^i for i < 2(q-1)
  std::vector<std::int32_t> log;   // log[0] = -1
  std::vector<std::int32_t> zech;  // k > 1: log(1 + g^n), -1 when 1 + g^n = 0
  std::vector<std::uint32_t> rank; // position in lexicographic order of coeffs
};

}  // namespace detail

// Handle to an immutable description of GF(p^k) together with its
// arithmetic tables. Handles are cheap to copy. Two handles compare equal
// iff they name the same (p, modulus); construction is memoized so equal
// fields share tables.
class Field {
 public:
  // GF(p^k) with the modulus returned by find_irreducible(p, k).
  static Field gf(std::uint32_t p, unsigned k = 1);
  // GF(p^k) presented by a user supplied monic irreducible modulus
  // (constant term first, degree k = modulus.size() - 1).
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return t_->p; }
  unsigned degree() const { return t_->k; }
  std::uint32_t order() const { return t_->q; }
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  bool is_canonical() const { return t_->canonical; }

  // Canonical GF(p^{k d}).
  Field extension(unsigned d) const { return gf(characteristic(), degree() * d); }

  std::string name() const;

  bool operator==(const Field& other) const { return t_ == other.t_; }

  // Raw arithmetic. Arguments must be values of this field.
  Value add(Value a, Value b) const {
    const auto& t = *t_;
    if (t.k == 1) {
      const Value s = a + b;
      return s >= t.p ? s - t.p : s;
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const std::int32_t la = t.log[a];
    std::int32_t n = t.log[b] - la;
    if (n < 0) n += static_cast<std::int32_t>(t.q - 1);
    const std::int32_t z = t.zech[n];
    if (z < 0) return 0;
    return t.exp[la + z];
  }
  Value neg(Value a) const {
    const auto& t = *t_;
    if (a == 0) return 0;
    if (t.k == 1) return t.p - a;
    return t.exp[t.log[a] + (t.q - 1) / 2];
  }
  Value sub(Value a, Value b) const { return add(a, neg(b)); }
  Value mul(Value a, Value b) const {
    const auto& t = *t_;
    if (t.k == 1) return static_cast<Value>((std::uint64_t{a} * b) % t.p);
    if (a == 0 || b == 0) return 0;
    return t.exp[t.log[a] + t.log[b]];
  }
  Value inv(Value a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero in " + name());
    const auto& t = *t_;
    return t.exp[(t.q - 1 - t.log[a]) % (t.q - 1)];
  }
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  Value pow(Value a, std::uint64_t e) const;
  Value frobenius(Value a) const { return pow(a, t_->p); }
  // Inverse of the Frobenius automorphism, a^{p^{k-1}}.
  Value pth_root(Value a) const;

  // Image of an integer in the prime subfield.
  Value from_int(long long n) const;
  // Reduces c_0 + c_1 t + ... (any length, entries mod p) by the modulus.
  Value from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Value a) const;
  // The class of t (k > 1), or 0 for a prime field.
  Value generator() const;
  // A generator of the multiplicative group.
  Value primitive() const { return t_->exp[1]; }
  std::uint32_t lex_rank(Value a) const { return t_->rank[a]; }
  bool lex_less(Value a, Value b) const { return t_->rank[a] < t_->rank[b]; }

  // log of a nonzero value with respect to primitive().
  std::uint32_t log(Value a) const;

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

// An element together with the field it lives in. Mixed-field arithmetic
// throws FieldMismatchError.
class Elem {
 public:
  Elem(Field field, Value value);

  static Elem zero(const Field& f) { return Elem(f, 0); }
  static Elem one(const Field& f) { return Elem(f, f.from_int(1)); }
  static Elem from_int(const Field& f, long long n) { return Elem(f, f.from_int(n)); }
  // Coefficients of the representative in t, constant term first.
  static Elem from_coeffs(const Field& f, std::span<const std::uint32_t> c) {
    return Elem(f, f.from_coeffs(c));
  }
  static Elem from_coeffs(const Field& f, std::initializer_list<std::uint32_t> c) {
    return from_coeffs(f, std::span<const std::uint32_t>(c.begin(), c.size()));
  }

  const Field& field() const { return field_; }
  Value value() const { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(value_); }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == field_.from_int(1); }

  Elem operator-() const { return Elem(field_, field_.neg(value_)); }
  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b);

  Elem inv() const { return Elem(field_, field_.inv(value_)); }
  Elem pow(std::uint64_t e) const { return Elem(field_, field_.pow(value_, e)); }
  Elem frobenius() const { return Elem(field_, field_.frobenius(value_)); }

  bool operator==(const Elem& other) const {
    return field_ == other.field_ && value_ == other.value_;
  }

 private:
  Field field_;
  Value value_;
};

// Lexicographic order of coefficient vectors (constant term first).
bool lex_less(const Elem& a, const Elem& b);

void require_same_field(const Field& a, const Field& b);

// Euler's criterion. Throws PreconditionError for c = 0.
bool is_square(const Elem& c);

// The square root of c whose coefficient vector is lexicographically
// smaller. Throws PreconditionError if c is zero or a nonsquare.
Elem sqrt(const Elem& c);

bool is_prime(std::uint64_t n);

// First monic irreducible polynomial of degree k over GF(p) when the
// non-leading coefficients are read as a base-p integer (constant term
// least significant). k = 1 gives X. Coefficients are constant term first.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned k);

// Rabin-style test: gcd(X^{p^d} - X, m) = 1 for d <= k/2.
bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic);

}  // namespace addsep

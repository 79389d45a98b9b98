#pragma once

// Exact scalars: integers, rationals in lowest terms, and residues mod a prime.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace zfam {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ground ring of a coefficient: Z, Q, or F_p.
struct Domain {
  enum class Kind : std::uint8_t { Integer, Rational, Modular };

  Kind kind = Kind::Rational;
  std::uint64_t prime = 0;

  static Domain integers() { return {Kind::Integer, 0}; }
  static Domain rationals() { return {Kind::Rational, 0}; }
  static Domain modular(std::uint64_t p);

  bool is_field() const { return kind != Kind::Integer; }
  /// 0 for Z and Q.
  std::uint64_t characteristic() const { return kind == Kind::Modular ? prime : 0; }

  std::string name() const {
    switch (kind) {
      case Kind::Integer: return "ZZ";
      case Kind::Rational: return "QQ";
      case Kind::Modular: return "GF(" + std::to_string(prime) + ")";
    }
    return "?";
  }

  friend bool operator==(const Domain&, const Domain&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Domain Domain::modular(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) throw DomainError("modulus too large");
  return {Kind::Modular, p};
}

namespace detail {

struct Residue {
  std::uint64_t value;
  std::uint64_t prime;
};

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace detail

/// A scalar living in exactly one Domain.
class Coefficient {
 public:
  Coefficient() : value_(mpq_class(0)) {}

  static Coefficient integer(mpz_class z) { return Coefficient(Storage(std::move(z))); }
  static Coefficient rational(mpq_class q) {
    q.canonicalize();
    return Coefficient(Storage(std::move(q)));
  }
  static Coefficient residue(std::int64_t v, std::uint64_t p) {
    auto pp = static_cast<std::int64_t>(p);
    auto r = static_cast<std::uint64_t>(((v % pp) + pp) % pp);
    return Coefficient(Storage(detail::Residue{r, p}));
  }

  /// Image of an integer in the given domain.
  static Coefficient from_integer(const mpz_class& z, const Domain& d) {
    switch (d.kind) {
      case Domain::Kind::Integer: return integer(z);
      case Domain::Kind::Rational: return rational(mpq_class(z));
      case Domain::Kind::Modular:
        return Coefficient(Storage(detail::Residue{detail::reduce_mpz(z, d.prime), d.prime}));
    }
    return {};
  }
  static Coefficient from_integer(long z, const Domain& d) { return from_integer(mpz_class(z), d); }
  static Coefficient zero(const Domain& d) { return from_integer(0L, d); }
  static Coefficient one(const Domain& d) { return from_integer(1L, d); }

  /// Image of a rational in the given domain. Fails for Z on non-integers and
  /// for F_p when p divides the denominator.
  static Coefficient from_rational(const mpq_class& q, const Domain& d) {
    switch (d.kind) {
      case Domain::Kind::Integer:
        if (q.get_den() != 1) throw DomainError("non-integral value " + q.get_str() + " in ZZ");
        return integer(q.get_num());
      case Domain::Kind::Rational: return rational(q);
      case Domain::Kind::Modular: {
        std::uint64_t den = detail::reduce_mpz(q.get_den(), d.prime);
        if (den == 0)
          throw DomainError("denominator of " + q.get_str() + " vanishes mod " + std::to_string(d.prime));
        std::uint64_t num = detail::reduce_mpz(q.get_num(), d.prime);
        std::uint64_t inv = detail::mod_pow(den, d.prime - 2, d.prime);
        return Coefficient(Storage(detail::Residue{num * inv % d.prime, d.prime}));
      }
    }
    return {};
  }

  Domain domain() const {
    if (std::holds_alternative<mpz_class>(value_)) return Domain::integers();
    if (std::holds_alternative<mpq_class>(value_)) return Domain::rationals();
    return Domain{Domain::Kind::Modular, std::get<detail::Residue>(value_).prime};
  }

  bool is_zero() const {
    return std::visit(
        [](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, detail::Residue>) return v.value == 0;
          else return v == 0;
        },
        value_);
  }
  bool is_one() const {
    return std::visit(
        [](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, detail::Residue>) return v.value == 1;
          else return v == 1;
        },
        value_);
  }

  /// Rational value for Z/Q coefficients.
  mpq_class as_rational() const {
    if (auto* z = std::get_if<mpz_class>(&value_)) return mpq_class(*z);
    if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw DomainError("residue has no rational value");
  }
  /// Representative in [0, p) for F_p coefficients.
  std::uint64_t residue_value() const {
    if (auto* r = std::get_if<detail::Residue>(&value_)) return r->value;
    throw DomainError("coefficient is not a residue");
  }

  Coefficient operator-() const {
    return std::visit(
        [](const auto& v) -> Coefficient {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, detail::Residue>)
            return Coefficient(Storage(detail::Residue{(v.prime - v.value) % v.prime, v.prime}));
          else return Coefficient(Storage(T(-v)));
        },
        value_);
  }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b) { return combine(a, b, Op::Add); }
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return combine(a, b, Op::Sub); }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) { return combine(a, b, Op::Mul); }
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  Coefficient inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (auto* r = std::get_if<detail::Residue>(&value_))
      return Coefficient(Storage(detail::Residue{detail::mod_pow(r->value, r->prime - 2, r->prime), r->prime}));
    if (auto* q = std::get_if<mpq_class>(&value_)) return rational(mpq_class(1) / *q);
    throw DomainError("inverse requested in ZZ");
  }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (auto* r = std::get_if<detail::Residue>(&a.value_)) {
      const auto& s = std::get<detail::Residue>(b.value_);
      return r->prime == s.prime && r->value == s.value;
    }
    if (auto* z = std::get_if<mpz_class>(&a.value_)) return *z == std::get<mpz_class>(b.value_);
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  }

  /// Sign used when printing: -1 for negative Z/Q values, +1 otherwise.
  int sign() const {
    if (auto* z = std::get_if<mpz_class>(&value_)) return sgn(*z);
    if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
    return is_zero() ? 0 : 1;
  }

  std::string to_string() const {
    if (auto* z = std::get_if<mpz_class>(&value_)) return z->get_str();
    if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<detail::Residue>(value_).value);
  }

 private:
  using Storage = std::variant<mpz_class, mpq_class, detail::Residue>;
  enum class Op { Add, Sub, Mul };

  explicit Coefficient(Storage s) : value_(std::move(s)) {}

  static Coefficient combine(const Coefficient& a, const Coefficient& b, Op op) {
    if (a.value_.index() != b.value_.index())
      throw DomainError("mixed coefficient domains " + a.domain().name() + " and " + b.domain().name());
    if (auto* r = std::get_if<detail::Residue>(&a.value_)) {
      const auto& s = std::get<detail::Residue>(b.value_);
      if (r->prime != s.prime) throw DomainError("mixed moduli");
      const std::uint64_t p = r->prime;
      std::uint64_t v = 0;
      switch (op) {
        case Op::Add: v = (r->value + s.value) % p; break;
        case Op::Sub: v = (r->value + p - s.value) % p; break;
        case Op::Mul: v = r->value * s.value % p; break;
      }
      return Coefficient(Storage(detail::Residue{v, p}));
    }
    if (auto* z = std::get_if<mpz_class>(&a.value_)) {
      const auto& w = std::get<mpz_class>(b.value_);
      switch (op) {
        case Op::Add: return Coefficient(Storage(mpz_class(*z + w)));
        case Op::Sub: return Coefficient(Storage(mpz_class(*z - w)));
        case Op::Mul: return Coefficient(Storage(mpz_class(*z * w)));
      }
    }
    const auto& q = std::get<mpq_class>(a.value_);
    const auto& w = std::get<mpq_class>(b.value_);
    switch (op) {
      case Op::Add: return Coefficient(Storage(mpq_class(q + w)));
      case Op::Sub: return Coefficient(Storage(mpq_class(q - w)));
      case Op::Mul: return Coefficient(Storage(mpq_class(q * w)));
    }
    return {};
  }

  Storage value_;
};

/// Reduce a Z/Q coefficient into F_p (or any target domain).
inline Coefficient convert(const Coefficient& c, const Domain& target) {
  if (c.domain() == target) return c;
  if (c.domain().kind == Domain::Kind::Modular) throw DomainError("cannot lift a residue");
  return Coefficient::from_rational(c.as_rational(), target);
}

}  // namespace zfam

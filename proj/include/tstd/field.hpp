#ifndef TSTD_FIELD_HPP
#define TSTD_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace tstd {

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, PrimeField };

namespace detail {

inline bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// x^-1 mod p by extended Euclid; x in [1, p).
inline std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = x;
  while (nr != 0) {
    std::int64_t quot = r / nr;
    std::int64_t tmp = t - quot * nt;
    t = nt;
    nt = tmp;
    tmp = r - quot * nr;
    r = nr;
    nr = tmp;
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

}  // namespace detail

/// Description of the coefficient field: QQ or F_p with p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

  static FieldSpec prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !detail::is_prime_u32(p))
      throw std::invalid_argument("field characteristic must be a prime < 2^31");
    return FieldSpec{FieldKind::PrimeField, p};
  }

  bool operator==(const FieldSpec&) const = default;
};

/// Residue in [0, p); carries its modulus so mixed-field use is detectable.
struct Residue {
  std::uint32_t v = 0;
  std::uint32_t p = 0;
  bool operator==(const Residue&) const = default;
};

/// Exact field element in canonical form: a fully reduced rational with
/// positive denominator, or a prime-field residue in [0, p).
class Coeff {
 public:
  Coeff() : v_(mpq_class(0)) {}
  explicit Coeff(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  Coeff(std::uint32_t v, std::uint32_t p) : v_(Residue{v % p, p}) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  const Residue& residue() const { return std::get<Residue>(v_); }

  bool is_zero() const {
    return is_rational() ? rational() == 0 : residue().v == 0;
  }
  bool is_one() const {
    return is_rational() ? rational() == 1 : residue().v == 1;
  }

  bool operator==(const Coeff& o) const { return v_ == o.v_; }

 private:
  std::variant<mpq_class, Residue> v_;
};

namespace detail {

inline void require_member(const FieldSpec& fs, const Coeff& a) {
  if (fs.kind == FieldKind::Rationals) {
    if (!a.is_rational()) throw MathError("mixed-field operands");
  } else {
    if (a.is_rational() || a.residue().p != fs.characteristic)
      throw MathError("mixed-field operands");
  }
}

}  // namespace detail

inline Coeff field_zero(const FieldSpec& fs) {
  return fs.kind == FieldKind::Rationals ? Coeff(mpq_class(0)) : Coeff(0, fs.characteristic);
}

inline Coeff field_one(const FieldSpec& fs) {
  return fs.kind == FieldKind::Rationals ? Coeff(mpq_class(1)) : Coeff(1, fs.characteristic);
}

inline Coeff field_from_long(const FieldSpec& fs, long n) {
  if (fs.kind == FieldKind::Rationals) return Coeff(mpq_class(n));
  long p = fs.characteristic;
  long r = n % p;
  if (r < 0) r += p;
  return Coeff(static_cast<std::uint32_t>(r), fs.characteristic);
}

inline Coeff field_add(const FieldSpec& fs, const Coeff& a, const Coeff& b) {
  detail::require_member(fs, a);
  detail::require_member(fs, b);
  if (fs.kind == FieldKind::Rationals) return Coeff(a.rational() + b.rational());
  std::uint64_t s = std::uint64_t(a.residue().v) + b.residue().v;
  if (s >= fs.characteristic) s -= fs.characteristic;
  return Coeff(static_cast<std::uint32_t>(s), fs.characteristic);
}

inline Coeff field_neg(const FieldSpec& fs, const Coeff& a) {
  detail::require_member(fs, a);
  if (fs.kind == FieldKind::Rationals) return Coeff(mpq_class(-a.rational()));
  std::uint32_t v = a.residue().v;
  return Coeff(v == 0 ? 0 : fs.characteristic - v, fs.characteristic);
}

inline Coeff field_sub(const FieldSpec& fs, const Coeff& a, const Coeff& b) {
  return field_add(fs, a, field_neg(fs, b));
}

inline Coeff field_mul(const FieldSpec& fs, const Coeff& a, const Coeff& b) {
  detail::require_member(fs, a);
  detail::require_member(fs, b);
  if (fs.kind == FieldKind::Rationals) return Coeff(a.rational() * b.rational());
  std::uint64_t prod = std::uint64_t(a.residue().v) * b.residue().v % fs.characteristic;
  return Coeff(static_cast<std::uint32_t>(prod), fs.characteristic);
}

inline Coeff field_inv(const FieldSpec& fs, const Coeff& a) {
  detail::require_member(fs, a);
  if (a.is_zero()) throw MathError("division by zero in coefficient field");
  if (fs.kind == FieldKind::Rationals) return Coeff(mpq_class(1 / a.rational()));
  return Coeff(detail::inv_mod(a.residue().v, fs.characteristic), fs.characteristic);
}

inline Coeff field_div(const FieldSpec& fs, const Coeff& a, const Coeff& b) {
  return field_mul(fs, a, field_inv(fs, b));
}

inline std::string coeff_to_string(const Coeff& a) {
  if (a.is_rational()) return a.rational().get_str();
  return std::to_string(a.residue().v);
}

/// Accepts an optional sign and a `/`-separated fraction; e.g. "5", "-3/4".
inline Coeff parse_coeff(const FieldSpec& fs, const std::string& text) {
  auto bad = [&] { return std::invalid_argument("invalid coefficient literal: " + text); };
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  auto digits = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw bad();
    return text.substr(start, i - start);
  };
  std::string num = digits();
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits();
  }
  if (i != text.size()) throw bad();
  mpz_class numz(num), denz(den);
  if (denz == 0) throw MathError("division by zero in coefficient field");
  mpq_class q(numz, denz);
  q.canonicalize();
  if (neg) q = -q;
  if (fs.kind == FieldKind::Rationals) return Coeff(q);
  mpz_class p(fs.characteristic);
  mpz_class n = q.get_num() % p;
  if (n < 0) n += p;
  Coeff c(static_cast<std::uint32_t>(n.get_ui()), fs.characteristic);
  mpz_class d = q.get_den() % p;
  if (d == 0) throw MathError("division by zero in coefficient field");
  if (d == 1) return c;
  return field_div(fs, c, Coeff(static_cast<std::uint32_t>(d.get_ui()), fs.characteristic));
}

}  // namespace tstd

#endif

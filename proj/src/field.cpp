#include "vinerep/field.hpp"

#include "vinerep/error.hpp"

namespace vinerep {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::uint64_t p) {
  if (!is_prime(p)) fail("NotPrime", "field modulus " + std::to_string(p) + " is not prime");
  if (p > (1ull << 31)) fail("NotPrime", "field modulus too large");
  return Field{FieldKind::prime, p};
}

std::string Field::to_string() const {
  return kind == FieldKind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
}

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_inverse(std::uint64_t v, std::uint64_t p) {
  if (v % p == 0) fail("DivisionByZero", "inverse of zero in GF(" + std::to_string(p) + ")");
  return mod_pow(v, p - 2, p);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

Scalar Scalar::zero(const Field& f) { return Scalar(f, Rat(0), 0); }

Scalar Scalar::one(const Field& f) {
  return f.is_prime_field() ? Scalar(f, Rat(0), 1 % f.p) : Scalar(f, Rat(1), 0);
}

Scalar Scalar::from_int(const Field& f, long v) {
  if (!f.is_prime_field()) return Scalar(f, Rat(v), 0);
  return Scalar(f, Rat(0), reduce_mpz(mpz_class(v), f.p));
}

Scalar Scalar::from_rat(const Field& f, const Rat& r) {
  if (!f.is_prime_field()) {
    Rat c = r;
    c.canonicalize();
    return Scalar(f, c, 0);
  }
  if (r.get_den() != 1) fail("NotIntegral", "non-integer scalar for a prime field");
  return Scalar(f, Rat(0), reduce_mpz(r.get_num(), f.p));
}

std::optional<Scalar> Scalar::from_string(const Field& f, const std::string& s) {
  auto r = rat_from_string(s);
  if (!r) return std::nullopt;
  if (f.is_prime_field() && r->get_den() != 1) return std::nullopt;
  return from_rat(f, *r);
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? res_ == 1 % field_.p : rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) fail("FieldMismatch", "scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field()) return Scalar(field_, Rat(0), (res_ + o.res_) % field_.p);
  return Scalar(field_, Rat(rat_ + o.rat_), 0);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field())
    return Scalar(field_, Rat(0), (res_ + field_.p - o.res_) % field_.p);
  return Scalar(field_, Rat(rat_ - o.rat_), 0);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field()) return Scalar(field_, Rat(0), res_ * o.res_ % field_.p);
  return Scalar(field_, Rat(rat_ * o.rat_), 0);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_prime_field())
    return Scalar(field_, Rat(0), res_ == 0 ? 0 : field_.p - res_);
  return Scalar(field_, Rat(-rat_), 0);
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

Scalar Scalar::inverse() const {
  if (field_.is_prime_field())
    return Scalar(field_, Rat(0), mod_inverse(res_, field_.p));
  if (rat_ == 0) fail("DivisionByZero", "inverse of rational zero");
  return Scalar(field_, Rat(1 / rat_), 0);
}

std::string Scalar::to_string() const {
  return field_.is_prime_field() ? std::to_string(res_) : rat_to_string(rat_);
}

}  // namespace vinerep

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vinerep/rational.hpp"

namespace vinerep {

enum class FieldKind { rationals, prime };

// Coefficient field of a module: the rationals or GF(p) for a prime p.
// Fixed per module instance and recorded in serialized files.
struct Field {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t p = 0;  // modulus, 0 for the rationals

  static Field rationals() { return Field{FieldKind::rationals, 0}; }
  static Field gf(std::uint64_t p);

  bool is_prime_field() const { return kind == FieldKind::prime; }
  bool operator==(const Field&) const = default;
  std::string to_string() const;
};

bool is_prime(std::uint64_t n);

// Exact field element. Rational values are kept canonical; prime-field
// values are residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar from_rat(const Field& f, const Rat& r);  // prime field: r must be integral
  // Accepts "n" for prime fields (reduced mod p) and "p/q" or "n" for rationals.
  static std::optional<Scalar> from_string(const Field& f, const std::string& s);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;  // throws DivisionByZero
  std::string to_string() const;

  // Rational payload (rationals only).
  const Rat& rat() const { return rat_; }
  // Residue payload (prime fields only).
  std::uint64_t residue() const { return res_; }

 private:
  Scalar(Field f, Rat r, std::uint64_t res)
      : field_(f), rat_(std::move(r)), res_(res) {}
  void check_same_field(const Scalar& o) const;

  Field field_ = Field::rationals();
  Rat rat_ = 0;
  std::uint64_t res_ = 0;
};

}  // namespace vinerep

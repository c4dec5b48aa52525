#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace posetmod {

/// Raised when two objects built over different coefficient fields meet.
class FieldMismatch : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An exact element of GF(p) or of Q.
///
/// Prime-field elements keep a canonical residue in `num` with `den == 1`.
/// Rationals are kept reduced with a positive denominator. Rational
/// arithmetic is checked and throws std::overflow_error rather than wrapping.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

/// Coefficient field descriptor: GF(p) for a prime p, or the rationals.
class Field {
public:
  enum class Kind { prime, rational };

  /// GF(2), the default.
  constexpr Field() = default;

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(Kind::rational, 0); }

  /// Parses "2", "3", "p=5", "Q" or "QQ".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint32_t characteristic() const { return kind_ == Kind::prime ? p_ : 0; }
  std::string to_string() const;

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return {1, 1}; }
  Scalar from_int(std::int64_t v) const;
  Scalar from_ratio(std::int64_t n, std::int64_t d) const;

  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  static bool is_zero(Scalar a) { return a.num == 0; }

  /// Human-readable form: "3", "-1/2". Prime-field residues print as
  /// their least nonnegative representative.
  std::string format(Scalar a) const;
  Scalar parse_scalar(const std::string& text) const;

  friend bool operator==(const Field&, const Field&) = default;

  /// Throws FieldMismatch unless both descriptors agree.
  static void require_same(const Field& a, const Field& b);

private:
  constexpr Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  Kind kind_ = Kind::prime;
  std::uint32_t p_ = 2;
};

}  // namespace posetmod

#include "posetmod/field.hpp"

#include <charconv>
#include <numeric>

namespace posetmod {

namespace {

__extension__ typedef __int128 Wide;

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t checked(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational arithmetic overflowed 64 bits");
  return static_cast<std::int64_t>(v);
}

Scalar reduce(Wide n, Wide d) {
  if (d == 0) throw std::domain_error("division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide a = n < 0 ? -n : n;
  Wide b = d;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return {checked(n), checked(d)};
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  if (p > (1u << 31)) throw std::invalid_argument("field characteristic too large");
  return Field(Kind::prime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ" || text == "rationals") return rationals();
  std::string_view s = text;
  if (s.starts_with("p=")) s.remove_prefix(2);
  if (s.starts_with("GF(") && s.ends_with(")")) s = s.substr(3, s.size() - 4);
  std::int64_t p = parse_int(s);
  if (p <= 0 || p > UINT32_MAX) throw std::invalid_argument("bad field characteristic: " + text);
  return prime(static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const {
  return kind_ == Kind::rational ? "Q" : std::to_string(p_);
}

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::rational) return {v, 1};
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {r, 1};
}

Scalar Field::from_ratio(std::int64_t n, std::int64_t d) const {
  if (kind_ == Kind::rational) return reduce(n, d);
  return div(from_int(n), from_int(d));
}

Scalar Field::add(Scalar a, Scalar b) const {
  if (kind_ == Kind::prime) return {(a.num + b.num) % p_, 1};
  if (a.den == b.den) return reduce(static_cast<Wide>(a.num) + b.num, a.den);
  return reduce(static_cast<Wide>(a.num) * b.den + static_cast<Wide>(b.num) * a.den,
                static_cast<Wide>(a.den) * b.den);
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const {
  if (kind_ == Kind::prime) return {(a.num * b.num) % p_, 1};
  if (a.num == 0 || b.num == 0) return zero();
  return reduce(static_cast<Wide>(a.num) * b.num, static_cast<Wide>(a.den) * b.den);
}

Scalar Field::neg(Scalar a) const {
  if (kind_ == Kind::prime) return {a.num == 0 ? 0 : p_ - a.num, 1};
  return {-a.num, a.den};
}

Scalar Field::inv(Scalar a) const {
  if (a.num == 0) throw std::domain_error("inverse of zero");
  if (kind_ == Kind::rational) return reduce(a.den, a.num);
  // Extended Euclid on (residue, p).
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a.num;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return {t, 1};
}

std::string Field::format(Scalar a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Scalar Field::parse_scalar(const std::string& text) const {
  auto slash = text.find('/');
  if (slash == std::string::npos) return from_int(parse_int(text));
  std::int64_t n = parse_int(std::string_view(text).substr(0, slash));
  std::int64_t d = parse_int(std::string_view(text).substr(slash + 1));
  return from_ratio(n, d);
}

void Field::require_same(const Field& a, const Field& b) {
  if (!(a == b))
    throw FieldMismatch("coefficient fields differ: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace posetmod

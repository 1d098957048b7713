#include "gwstack/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace gwstack {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Splits "[-]digits[/digits]" into numerator and denominator integers.
std::optional<std::pair<mpz_class, mpz_class>> split(std::string_view text) {
  std::string_view num_part = text;
  std::string_view den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }
  const bool negative = !num_part.empty() && num_part.front() == '-';
  if (negative) num_part.remove_prefix(1);
  if (!all_digits(num_part) || !all_digits(den_part)) return std::nullopt;
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) return std::nullopt;
  if (negative) num = -num;
  return std::make_pair(num, den);
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

std::optional<Rat> Rat::parse_canonical(std::string_view text) {
  auto parts = split(text);
  if (!parts) return std::nullopt;
  auto& [num, den] = *parts;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    // "0" is canonical, "0/5" is not.
    if (!(num == 0 && den == 1)) return std::nullopt;
  }
  if (text.find('/') != std::string_view::npos && den == 1) return std::nullopt;
  if (num == 0 && text.front() == '-') return std::nullopt;
  return Rat(mpq_class(num, den));
}

std::optional<Rat> Rat::parse(std::string_view text) {
  auto parts = split(text);
  if (!parts) return std::nullopt;
  return Rat(mpq_class(parts->first, parts->second));
}

std::int64_t Rat::to_int64() const {
  if (!is_integer()) throw std::domain_error("rational is not an integer: " + str());
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("integer out of range: " + str());
  return n.get_si();
}

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace gwstack

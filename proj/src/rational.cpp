#include "ddsteps/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ddsteps {

namespace {

bool all_digits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char ch) {
           return std::isdigit(static_cast<unsigned char>(ch)) != 0;
         });
}

std::size_t first_non_digit(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(text[i])) == 0) return i;
  }
  return text.size();
}

}  // namespace

Rat ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rat value(num, 1);
  value /= den;
  return value;
}

Rat parse_rational(std::string_view token) {
  if (token.empty()) throw RationalSyntaxError("empty rational", 0);
  std::size_t pos = 0;
  bool negative = false;
  if (token[0] == '-') {
    negative = true;
    pos = 1;
  }
  const auto slash = token.find('/', pos);
  const std::string_view num = token.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
  if (!all_digits(num)) {
    throw RationalSyntaxError("malformed numerator in '" + std::string(token) + "'", pos + first_non_digit(num));
  }
  mpz_class numerator(std::string(num), 10);
  mpz_class denominator = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = token.substr(slash + 1);
    if (!all_digits(den)) {
      throw RationalSyntaxError("malformed denominator in '" + std::string(token) + "'", slash + 1 + first_non_digit(den));
    }
    denominator = mpz_class(std::string(den), 10);
    if (denominator == 0) throw RationalSyntaxError("zero denominator in '" + std::string(token) + "'", slash + 1);
  }
  if (negative) numerator = -numerator;
  Rat value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

std::string to_string(std::span<const Rat> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ' ';
    out += to_string(values[i]);
  }
  return out;
}

int sign(const Rat& value) {
  const int s = sgn(value);
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

Rat dot(std::span<const Rat> lhs, std::span<const Rat> rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (sgn(lhs[i]) != 0 && sgn(rhs[i]) != 0) acc += lhs[i] * rhs[i];
  }
  return acc;
}

bool is_zero(std::span<const Rat> values) {
  return std::all_of(values.begin(), values.end(), [](const Rat& v) { return sgn(v) == 0; });
}

RatVec zeros(std::size_t dim) { return RatVec(dim, Rat(0)); }

RatVec add(std::span<const Rat> lhs, std::span<const Rat> rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("add: dimension mismatch");
  RatVec out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] + rhs[i];
  return out;
}

RatVec subtract(std::span<const Rat> lhs, std::span<const Rat> rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("subtract: dimension mismatch");
  RatVec out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] - rhs[i];
  return out;
}

RatVec scaled(std::span<const Rat> values, const Rat& factor) {
  RatVec out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] * factor;
  return out;
}

Rat l1_norm(std::span<const Rat> values) {
  Rat acc = 0;
  for (const auto& v : values) acc += abs(v);
  return acc;
}

RatVec primitive_integer(std::span<const Rat> values) {
  if (is_zero(values)) return RatVec(values.begin(), values.end());
  mpz_class den_lcm = 1;
  for (const auto& v : values) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& v : values) {
    mpz_class scaled_num = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  RatVec out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    mpz_class scaled_num = values[i].get_num() * (den_lcm / values[i].get_den());
    out[i] = Rat(mpz_class(scaled_num / num_gcd));
  }
  return out;
}

RatVec canonical_direction(std::span<const Rat> values) {
  RatVec out = primitive_integer(values);
  for (const auto& v : out) {
    if (sgn(v) == 0) continue;
    if (sgn(v) < 0) {
      for (auto& w : out) w = -w;
    }
    break;
  }
  return out;
}

bool is_integral(std::span<const Rat> values) {
  return std::all_of(values.begin(), values.end(), [](const Rat& v) { return v.get_den() == 1; });
}

bool is_positive_multiple(std::span<const Rat> lhs, std::span<const Rat> rhs) {
  if (lhs.size() != rhs.size() || is_zero(rhs) || is_zero(lhs)) return false;
  Rat lambda = 0;
  bool have_lambda = false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (sgn(rhs[i]) == 0) {
      if (sgn(lhs[i]) != 0) return false;
      continue;
    }
    Rat ratio = lhs[i] / rhs[i];
    if (!have_lambda) {
      lambda = ratio;
      have_lambda = true;
    } else if (ratio != lambda) {
      return false;
    }
  }
  return sgn(lambda) > 0;
}

std::size_t encoding_bits(std::span<const Rat> values) {
  std::size_t bits = 0;
  for (const auto& v : values) {
    bits += mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
  }
  return bits;
}

}  // namespace ddsteps

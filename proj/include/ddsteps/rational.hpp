#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ddsteps {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation; the two-argument
/// mpq_class constructor does not, so fractions are built with ratio().
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

/// num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rat ratio(long num, long den);

/// Thrown by the strict rational parser. `offset` is the 0-based character
/// position inside the token where the problem was found.
class RationalSyntaxError : public std::invalid_argument {
 public:
  RationalSyntaxError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Accepts "p", "-p", "p/q", "-p/q" with decimal digits only and q > 0.
Rat parse_rational(std::string_view token);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

/// Space-separated rationals, no trailing whitespace.
std::string to_string(std::span<const Rat> values);

int sign(const Rat& value);

Rat dot(std::span<const Rat> lhs, std::span<const Rat> rhs);

bool is_zero(std::span<const Rat> values);

RatVec zeros(std::size_t dim);

RatVec add(std::span<const Rat> lhs, std::span<const Rat> rhs);
RatVec subtract(std::span<const Rat> lhs, std::span<const Rat> rhs);
RatVec scaled(std::span<const Rat> values, const Rat& factor);

/// Sum of absolute values.
Rat l1_norm(std::span<const Rat> values);

/// Positive rescaling of `values` to coprime integers. The zero vector is
/// returned unchanged.
RatVec primitive_integer(std::span<const Rat> values);

/// primitive_integer followed by a sign flip making the first nonzero
/// entry positive.
RatVec canonical_direction(std::span<const Rat> values);

bool is_integral(std::span<const Rat> values);

/// Returns lambda > 0 with lhs = lambda * rhs, or nothing.
bool is_positive_multiple(std::span<const Rat> lhs, std::span<const Rat> rhs);

/// Total bit length of numerators and denominators, a size measure for
/// rational data.
std::size_t encoding_bits(std::span<const Rat> values);

}  // namespace ddsteps

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace css {

/// Exact rational in [0,1], always held in lowest terms so that equality is
/// structural. Complement (1 - x) and min/max never leave the set or grow the
/// denominator, so 64-bit storage is enough for every operation in the algebra.
class UnitRational {
 public:
  constexpr UnitRational() noexcept = default;

  /// Throws MalformedNumber when den == 0 and OutOfUnitRange when num > den.
  static UnitRational from_ratio(std::uint64_t num, std::uint64_t den);

  static constexpr UnitRational zero() noexcept { return UnitRational(0, 1); }
  static constexpr UnitRational one() noexcept { return UnitRational(1, 1); }

  constexpr std::uint64_t numerator() const noexcept { return num_; }
  constexpr std::uint64_t denominator() const noexcept { return den_; }

  /// 1 - x; stays in lowest terms because gcd(den - num, den) = gcd(num, den).
  constexpr UnitRational complement() const noexcept { return UnitRational(den_ - num_, den_); }

  friend constexpr bool operator==(const UnitRational&, const UnitRational&) noexcept = default;
  friend std::strong_ordering operator<=>(const UnitRational& a, const UnitRational& b) noexcept {
    const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  /// Shortest exact decimal when the denominator divides 10^18 or less,
  /// otherwise "n/m".
  std::string to_string() const;

 private:
  constexpr UnitRational(std::uint64_t num, std::uint64_t den) noexcept : num_(num), den_(den) {}

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Accepts `d(.d+)?` or `n/m`. The result equals the literal exactly.
UnitRational parse_unit_value(std::string_view text);

}  // namespace css

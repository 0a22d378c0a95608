#include "css/unit_rational.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "css/error.hpp"

namespace css {

namespace {

constexpr std::size_t kMaxFractionDigits = 18;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::uint64_t parse_u64(std::string_view digits, std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::MalformedNumber, "'" + std::string(text) + "' does not fit in 64 bits");
  }
  return value;
}

}  // namespace

UnitRational UnitRational::from_ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) {
    throw Error(ErrorKind::MalformedNumber, "zero denominator");
  }
  if (num > den) {
    throw Error(ErrorKind::OutOfUnitRange,
                std::to_string(num) + "/" + std::to_string(den) + " is greater than 1");
  }
  const std::uint64_t g = std::gcd(num, den);
  return UnitRational(num / g, den / g);
}

std::string UnitRational::to_string() const {
  std::uint64_t d = den_;
  std::size_t twos = 0;
  std::size_t fives = 0;
  for (; d % 2 == 0; d /= 2) ++twos;
  for (; d % 5 == 0; d /= 5) ++fives;
  // the parser reads at most kMaxFractionDigits digits back
  if (d != 1 || std::max(twos, fives) > kMaxFractionDigits) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  if (num_ == den_) return "1";
  if (num_ == 0) return "0";
  // Long division terminates because den_ = 2^a 5^b.
  std::string out = "0.";
  unsigned __int128 rem = num_;
  while (rem != 0) {
    rem *= 10;
    out.push_back(static_cast<char>('0' + static_cast<int>(rem / den_)));
    rem %= den_;
  }
  return out;
}

UnitRational parse_unit_value(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorKind::MalformedNumber, "'" + std::string(text) + "' is not n/m");
    }
    return UnitRational::from_ratio(parse_u64(num, text), parse_u64(den, text));
  }

  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (!all_digits(whole) || (dot != std::string_view::npos && !all_digits(frac))) {
    throw Error(ErrorKind::MalformedNumber, "'" + std::string(text) + "' is not a decimal literal");
  }

  whole.remove_prefix(std::min(whole.find_first_not_of('0'), whole.size()));
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);

  if (whole.size() > 1 || (whole == "1" && !frac.empty()) || (!whole.empty() && whole != "1")) {
    throw Error(ErrorKind::OutOfUnitRange, "'" + std::string(text) + "' is greater than 1");
  }
  if (whole == "1") return UnitRational::one();
  if (frac.empty()) return UnitRational::zero();
  if (frac.size() > kMaxFractionDigits) {
    throw Error(ErrorKind::MalformedNumber,
                "'" + std::string(text) + "' has more than 18 significant fraction digits");
  }
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return UnitRational::from_ratio(parse_u64(frac, text), den);
}

}  // namespace css

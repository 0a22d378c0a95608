#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "css/unit_rational.hpp"

namespace css {

/// Interval-valued membership degree [lo, hi] with lo <= hi.
class Interval {
 public:
  /// Throws InvertedInterval when lo > hi.
  Interval(UnitRational lo, UnitRational hi);

  const UnitRational& lo() const noexcept { return lo_; }
  const UnitRational& hi() const noexcept { return hi_; }

  bool strictly_contains(const UnitRational& v) const noexcept { return lo_ < v && v < hi_; }
  bool contains(const UnitRational& v) const noexcept { return lo_ <= v && v <= hi_; }

  friend bool operator==(const Interval&, const Interval&) noexcept = default;

 private:
  UnitRational lo_;
  UnitRational hi_;
};

/// One cell of a cubic soft set: the pair (A(x), lambda(x)).
struct CubicGrade {
  Interval ivf;
  UnitRational fuzzy;

  friend bool operator==(const CubicGrade&, const CubicGrade&) noexcept = default;
};

CubicGrade make_grade(UnitRational lo, UnitRational hi, UnitRational fuzzy);

struct ParameterId {
  std::string name;
  bool negated = false;

  /// Injective string key used in documents and diagnostics: "e1", "¬e1".
  /// Names that themselves start with "¬" or "\" get a leading "\".
  std::string key() const;

  friend bool operator==(const ParameterId&, const ParameterId&) = default;
  friend auto operator<=>(const ParameterId&, const ParameterId&) = default;
};

ParameterId negate_parameter(const ParameterId& p);

/// Parameter of a product set: named "(a,b)" from the component keys, so
/// negation of each component survives.
ParameterId pair_parameter(const ParameterId& a, const ParameterId& b);

/// A parameterised family of cubic sets over one finite universe. Grades are
/// stored parameter-major: grade(p, x) lives at p * |universe| + x.
class CubicSoftSet {
 public:
  CubicSoftSet() = default;

  /// Throws DuplicateElement, DuplicateParameter, or MissingGrade (when the
  /// grade table is not exactly |params| x |universe|).
  CubicSoftSet(std::vector<std::string> universe, std::vector<ParameterId> params,
               std::vector<CubicGrade> grades);

  std::span<const std::string> universe() const noexcept { return universe_; }
  std::span<const ParameterId> parameters() const noexcept { return params_; }
  std::span<const CubicGrade> grades() const noexcept { return grades_; }

  std::size_t universe_size() const noexcept { return universe_.size(); }
  std::size_t parameter_count() const noexcept { return params_.size(); }

  const CubicGrade& at(std::size_t param, std::size_t element) const {
    return grades_[param * universe_.size() + element];
  }

  std::optional<std::size_t> find_parameter(const ParameterId& p) const;
  std::optional<std::size_t> find_element(std::string_view label) const;

  /// Throws UnknownParameter / UnknownElement.
  const CubicGrade& grade(const ParameterId& p, std::string_view element) const;

  friend bool operator==(const CubicSoftSet&, const CubicSoftSet&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<ParameterId> params_;
  std::vector<CubicGrade> grades_;
};

enum class ConstantKind {
  DDot0,  // <[0,0], 1>
  DDot1,  // <[1,1], 0>
  Hat0,   // <[0,0], 0>
  Hat1,   // <[1,1], 1>
};

CubicSoftSet constant_cubic_soft_set(ConstantKind kind, std::vector<std::string> universe,
                                     std::vector<ParameterId> params);

}  // namespace css

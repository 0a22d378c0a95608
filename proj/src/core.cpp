#include "css/core.hpp"

#include <algorithm>
#include <set>

#include "css/error.hpp"

namespace css {

namespace {

constexpr std::string_view kNot = "\xC2\xAC";  // U+00AC NOT SIGN

}  // namespace

Interval::Interval(UnitRational lo, UnitRational hi) : lo_(lo), hi_(hi) {
  if (hi_ < lo_) {
    throw Error(ErrorKind::InvertedInterval,
                "[" + lo_.to_string() + "," + hi_.to_string() + "] has lo > hi");
  }
}

CubicGrade make_grade(UnitRational lo, UnitRational hi, UnitRational fuzzy) {
  return CubicGrade{Interval(lo, hi), fuzzy};
}

std::string ParameterId::key() const {
  std::string out;
  if (negated) out += kNot;
  if (name.starts_with(kNot) || name.starts_with('\\')) out += '\\';
  out += name;
  return out;
}

ParameterId negate_parameter(const ParameterId& p) { return ParameterId{p.name, !p.negated}; }

ParameterId pair_parameter(const ParameterId& a, const ParameterId& b) {
  return ParameterId{"(" + a.key() + "," + b.key() + ")", false};
}

CubicSoftSet::CubicSoftSet(std::vector<std::string> universe, std::vector<ParameterId> params,
                           std::vector<CubicGrade> grades)
    : universe_(std::move(universe)), params_(std::move(params)), grades_(std::move(grades)) {
  std::set<std::string_view> seen_elements;
  for (const auto& x : universe_) {
    if (!seen_elements.insert(x).second) {
      throw Error(ErrorKind::DuplicateElement, "element '" + x + "' listed twice");
    }
  }
  std::set<ParameterId> seen_params;
  for (const auto& p : params_) {
    if (!seen_params.insert(p).second) {
      throw Error(ErrorKind::DuplicateParameter, "parameter '" + p.key() + "' listed twice");
    }
  }
  const std::size_t expected = universe_.size() * params_.size();
  if (grades_.size() != expected) {
    if (grades_.size() < expected) {
      const std::size_t missing = grades_.size();
      throw Error(ErrorKind::MissingGrade, "grade table is not total",
                  params_[missing / universe_.size()].key(), universe_[missing % universe_.size()]);
    }
    throw Error(ErrorKind::MissingGrade, "grade table has " + std::to_string(grades_.size()) +
                                             " entries, expected " + std::to_string(expected));
  }
}

std::optional<std::size_t> CubicSoftSet::find_parameter(const ParameterId& p) const {
  const auto it = std::find(params_.begin(), params_.end(), p);
  if (it == params_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - params_.begin());
}

std::optional<std::size_t> CubicSoftSet::find_element(std::string_view label) const {
  const auto it = std::find(universe_.begin(), universe_.end(), label);
  if (it == universe_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - universe_.begin());
}

const CubicGrade& CubicSoftSet::grade(const ParameterId& p, std::string_view element) const {
  const auto pi = find_parameter(p);
  if (!pi) throw Error(ErrorKind::UnknownParameter, "no parameter '" + p.key() + "'");
  const auto xi = find_element(element);
  if (!xi) throw Error(ErrorKind::UnknownElement, "no element '" + std::string(element) + "'");
  return at(*pi, *xi);
}

CubicSoftSet constant_cubic_soft_set(ConstantKind kind, std::vector<std::string> universe,
                                     std::vector<ParameterId> params) {
  const auto zero = UnitRational::zero();
  const auto one = UnitRational::one();
  CubicGrade g = make_grade(zero, zero, zero);
  switch (kind) {
    case ConstantKind::DDot0: g = make_grade(zero, zero, one); break;
    case ConstantKind::DDot1: g = make_grade(one, one, zero); break;
    case ConstantKind::Hat0: g = make_grade(zero, zero, zero); break;
    case ConstantKind::Hat1: g = make_grade(one, one, one); break;
  }
  std::vector<CubicGrade> grades(universe.size() * params.size(), g);
  return CubicSoftSet(std::move(universe), std::move(params), std::move(grades));
}

}  // namespace css

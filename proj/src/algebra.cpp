#include "css/algebra.hpp"

#include <algorithm>

#include "css/error.hpp"

namespace css {

namespace {

void require_same_universe(const CubicSoftSet& f, const CubicSoftSet& g) {
  if (!same_universe(f, g)) {
    throw Error(ErrorKind::UniverseMismatch, "operands are graded over different universes");
  }
}

// g's element index for each of f's elements; universes already known equal.
std::vector<std::size_t> element_map(const CubicSoftSet& f, const CubicSoftSet& g) {
  std::vector<std::size_t> out;
  out.reserve(f.universe_size());
  for (const auto& x : f.universe()) out.push_back(*g.find_element(x));
  return out;
}

}  // namespace

Interval rmin(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval rmax(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

bool ivf_leq(const Interval& a, const Interval& b) { return a.lo() <= b.lo() && a.hi() <= b.hi(); }

CubicGrade grade_combine(CombineKind kind, const CubicGrade& a, const CubicGrade& b) {
  switch (kind) {
    case CombineKind::P_UNION: return {rmax(a.ivf, b.ivf), std::max(a.fuzzy, b.fuzzy)};
    case CombineKind::P_INTERSECTION: return {rmin(a.ivf, b.ivf), std::min(a.fuzzy, b.fuzzy)};
    case CombineKind::R_UNION: return {rmax(a.ivf, b.ivf), std::min(a.fuzzy, b.fuzzy)};
    case CombineKind::R_INTERSECTION: return {rmin(a.ivf, b.ivf), std::max(a.fuzzy, b.fuzzy)};
  }
  return a;
}

CubicGrade grade_complement(const CubicGrade& a) {
  return {Interval(a.ivf.hi().complement(), a.ivf.lo().complement()), a.fuzzy.complement()};
}

bool grade_leq(OrderKind kind, const CubicGrade& a, const CubicGrade& b) {
  if (!ivf_leq(a.ivf, b.ivf)) return false;
  return kind == OrderKind::P ? a.fuzzy <= b.fuzzy : a.fuzzy >= b.fuzzy;
}

CombineKind product_combine(ProductKind kind) {
  switch (kind) {
    case ProductKind::P_OR: return CombineKind::P_UNION;
    case ProductKind::R_OR: return CombineKind::R_UNION;
    case ProductKind::P_AND: return CombineKind::P_INTERSECTION;
    case ProductKind::R_AND: return CombineKind::R_INTERSECTION;
  }
  return CombineKind::P_UNION;
}

bool is_union(CombineKind kind) {
  return kind == CombineKind::P_UNION || kind == CombineKind::R_UNION;
}

bool same_universe(const CubicSoftSet& f, const CubicSoftSet& g) {
  if (f.universe_size() != g.universe_size()) return false;
  return std::all_of(f.universe().begin(), f.universe().end(),
                     [&](const std::string& x) { return g.find_element(x).has_value(); });
}

bool same_parameters(const CubicSoftSet& f, const CubicSoftSet& g) {
  if (f.parameter_count() != g.parameter_count()) return false;
  return std::all_of(f.parameters().begin(), f.parameters().end(),
                     [&](const ParameterId& p) { return g.find_parameter(p).has_value(); });
}

bool soft_equal(const CubicSoftSet& f, const CubicSoftSet& g) {
  if (!same_universe(f, g) || !same_parameters(f, g)) return false;
  const auto xs = element_map(f, g);
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    const auto q = *g.find_parameter(f.parameters()[p]);
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      if (!(f.at(p, x) == g.at(q, xs[x]))) return false;
    }
  }
  return true;
}

bool soft_suborder(OrderKind kind, const CubicSoftSet& f, const CubicSoftSet& g) {
  require_same_universe(f, g);
  const auto xs = element_map(f, g);
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    const auto q = g.find_parameter(f.parameters()[p]);
    if (!q) return false;
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      if (!grade_leq(kind, f.at(p, x), g.at(*q, xs[x]))) return false;
    }
  }
  return true;
}

CubicSoftSet soft_combine(CombineKind kind, const CubicSoftSet& f, const CubicSoftSet& g) {
  require_same_universe(f, g);
  const auto xs = element_map(f, g);
  const bool uni = is_union(kind);
  std::vector<ParameterId> params;
  std::vector<CubicGrade> grades;
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    const auto q = g.find_parameter(f.parameters()[p]);
    if (!q && !uni) continue;
    params.push_back(f.parameters()[p]);
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      grades.push_back(q ? grade_combine(kind, f.at(p, x), g.at(*q, xs[x])) : f.at(p, x));
    }
  }
  if (uni) {
    for (std::size_t q = 0; q < g.parameter_count(); ++q) {
      if (f.find_parameter(g.parameters()[q])) continue;
      params.push_back(g.parameters()[q]);
      for (std::size_t x = 0; x < f.universe_size(); ++x) grades.push_back(g.at(q, xs[x]));
    }
  }
  return CubicSoftSet({f.universe().begin(), f.universe().end()}, std::move(params),
                      std::move(grades));
}

CubicSoftSet soft_product(ProductKind kind, const CubicSoftSet& f, const CubicSoftSet& g) {
  require_same_universe(f, g);
  const auto xs = element_map(f, g);
  const auto combine = product_combine(kind);
  std::vector<ParameterId> params;
  std::vector<CubicGrade> grades;
  for (std::size_t a = 0; a < f.parameter_count(); ++a) {
    for (std::size_t b = 0; b < g.parameter_count(); ++b) {
      params.push_back(pair_parameter(f.parameters()[a], g.parameters()[b]));
      for (std::size_t x = 0; x < f.universe_size(); ++x) {
        grades.push_back(grade_combine(combine, f.at(a, x), g.at(b, xs[x])));
      }
    }
  }
  return CubicSoftSet({f.universe().begin(), f.universe().end()}, std::move(params),
                      std::move(grades));
}

CubicSoftSet soft_complement(const CubicSoftSet& f) {
  std::vector<ParameterId> params;
  for (const auto& p : f.parameters()) params.push_back(negate_parameter(p));
  std::vector<CubicGrade> grades;
  grades.reserve(f.grades().size());
  for (const auto& g : f.grades()) grades.push_back(grade_complement(g));
  return CubicSoftSet({f.universe().begin(), f.universe().end()}, std::move(params),
                      std::move(grades));
}

std::pair<CubicSoftSet, CubicSoftSet> star_swap(const CubicSoftSet& f, const CubicSoftSet& g) {
  if (!same_parameters(f, g)) {
    throw Error(ErrorKind::ParameterSetMismatch, "star swap needs identical parameter sets");
  }
  require_same_universe(f, g);
  const auto xs = element_map(f, g);
  std::vector<CubicGrade> fs;
  std::vector<CubicGrade> gs(g.grades().begin(), g.grades().end());
  fs.reserve(f.grades().size());
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    const auto q = *g.find_parameter(f.parameters()[p]);
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      const auto& a = f.at(p, x);
      auto& b = gs[q * g.universe_size() + xs[x]];
      fs.push_back({a.ivf, b.fuzzy});
      b.fuzzy = a.fuzzy;
    }
  }
  return {CubicSoftSet({f.universe().begin(), f.universe().end()},
                       {f.parameters().begin(), f.parameters().end()}, std::move(fs)),
          CubicSoftSet({g.universe().begin(), g.universe().end()},
                       {g.parameters().begin(), g.parameters().end()}, std::move(gs))};
}

}  // namespace css

#pragma once

#include <utility>

#include "css/core.hpp"

namespace css {

enum class CombineKind { P_UNION, P_INTERSECTION, R_UNION, R_INTERSECTION };
enum class ProductKind { P_OR, R_OR, P_AND, R_AND };
enum class OrderKind { P, R };

Interval rmin(const Interval& a, const Interval& b);
Interval rmax(const Interval& a, const Interval& b);

/// a ⪯ b
bool ivf_leq(const Interval& a, const Interval& b);

CubicGrade grade_combine(CombineKind kind, const CubicGrade& a, const CubicGrade& b);
CubicGrade grade_complement(const CubicGrade& a);

/// P: ivf ⪯ and fuzzy <=; R: ivf ⪯ and fuzzy >=.
bool grade_leq(OrderKind kind, const CubicGrade& a, const CubicGrade& b);

CombineKind product_combine(ProductKind kind);
bool is_union(CombineKind kind);

/// Universes compare as sets; listing order is presentation only.
bool same_universe(const CubicSoftSet& f, const CubicSoftSet& g);
bool same_parameters(const CubicSoftSet& f, const CubicSoftSet& g);

bool soft_equal(const CubicSoftSet& f, const CubicSoftSet& g);

/// Throws UniverseMismatch.
bool soft_suborder(OrderKind kind, const CubicSoftSet& f, const CubicSoftSet& g);

/// Unions cover I∪J (copying on I−J and J−I), intersections cover I∩J.
/// Result order: f's parameters then g's new ones; f's universe order.
/// Throws UniverseMismatch.
CubicSoftSet soft_combine(CombineKind kind, const CubicSoftSet& f, const CubicSoftSet& g);

/// Parameters I×J, I-major. Throws UniverseMismatch.
CubicSoftSet soft_product(ProductKind kind, const CubicSoftSet& f, const CubicSoftSet& g);

CubicSoftSet soft_complement(const CubicSoftSet& f);

/// (F*, G*): intervals kept, fuzzy parts exchanged.
/// Throws ParameterSetMismatch, UniverseMismatch.
std::pair<CubicSoftSet, CubicSoftSet> star_swap(const CubicSoftSet& f, const CubicSoftSet& g);

}  // namespace css

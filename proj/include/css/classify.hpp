#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "css/core.hpp"

namespace css {

struct Cell {
  ParameterId parameter;
  std::string element;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Classification {
  bool internal = true;
  bool external = true;
  std::vector<Cell> internal_violations;
  std::vector<Cell> external_violations;
};

bool is_internal(const CubicGrade& g);
bool is_external(const CubicGrade& g);

Classification classify(const CubicSoftSet& f);

/// Some cell with A⁻ < λ < A⁺, or nothing when f is external.
std::optional<Cell> theorem1_witness(const CubicSoftSet& f);

struct BoundaryCell {
  Cell cell;
  bool in_global_bounds;  // λ among {A⁺(y)} ∪ {A⁻(y)} over all y, same parameter
  bool at_own_endpoint;   // λ ∈ {A⁻(x), A⁺(x)}
};

struct BoundaryReport {
  bool global_holds = true;
  bool per_point_holds = true;
  std::vector<BoundaryCell> cells;
};

/// Throws NotBothInternalExternal unless f is both.
BoundaryReport theorem2_boundary_check(const CubicSoftSet& f);

enum class TheoremId {
  T_PU_ICSS,
  T_PI_ICSS,
  T_COMP_ICSS,
  T_COMP_ECSS,
  T_RU_ICSS,
  T_RI_ICSS,
  T_STAR_PU_ICSS,
  T_STAR_PI_ICSS,
  T_STAR_PU_ECSS,
  T_PI_ECSS,
  T_PI_BOTH,
  T_PU_ECSS,
  T_RU_ECSS,
  T_RI_ECSS,
  T_RI_BOTH,
  T_ICSS_RU_ECSS,
  T_ICSS_RI_ECSS,
};

std::span<const TheoremId> all_theorems();
std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view text);
bool is_unary(TheoremId id);
bool needs_equal_parameters(TheoremId id);

enum class BracketInterpretation { AsWritten, OpenOpen, ClosedClosed };

std::span<const BracketInterpretation> all_interpretations();
std::string_view to_string(BracketInterpretation interp);
std::optional<BracketInterpretation> interpretation_from_string(std::string_view text);

enum class CellHypothesis { Holds, Fails, Vacuous };

/// Hypothesis at one (parameter, element). A null grade means the parameter
/// is absent from that operand; for unary theorems g is ignored.
CellHypothesis cell_hypothesis(TheoremId id, const CubicGrade* f, const CubicGrade* g,
                               BracketInterpretation interp);

struct HypothesisDetail {
  bool holds = true;
  std::size_t vacuous_cells = 0;
  std::optional<Cell> first_failure;
};

/// Throws UniverseMismatch, and ParameterSetMismatch for the star theorems.
HypothesisDetail hypothesis_detail(TheoremId id, const CubicSoftSet& f, const CubicSoftSet& g,
                                   BracketInterpretation interp = BracketInterpretation::AsWritten);
bool hypothesis(TheoremId id, const CubicSoftSet& f, const CubicSoftSet& g,
                BracketInterpretation interp = BracketInterpretation::AsWritten);
bool hypothesis(TheoremId id, const CubicSoftSet& f);

}  // namespace css

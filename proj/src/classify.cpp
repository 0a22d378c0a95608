#include "css/classify.hpp"

#include <algorithm>
#include <array>

#include "css/algebra.hpp"
#include "css/error.hpp"

namespace css {

namespace {

constexpr std::array kTheorems{
    TheoremId::T_PU_ICSS,      TheoremId::T_PI_ICSS,      TheoremId::T_COMP_ICSS,
    TheoremId::T_COMP_ECSS,    TheoremId::T_RU_ICSS,      TheoremId::T_RI_ICSS,
    TheoremId::T_STAR_PU_ICSS, TheoremId::T_STAR_PI_ICSS, TheoremId::T_STAR_PU_ECSS,
    TheoremId::T_PI_ECSS,      TheoremId::T_PI_BOTH,      TheoremId::T_PU_ECSS,
    TheoremId::T_RU_ECSS,      TheoremId::T_RI_ECSS,      TheoremId::T_RI_BOTH,
    TheoremId::T_ICSS_RU_ECSS, TheoremId::T_ICSS_RI_ECSS,
};

constexpr std::array kInterpretations{
    BracketInterpretation::AsWritten,
    BracketInterpretation::OpenOpen,
    BracketInterpretation::ClosedClosed,
};

struct Bracket {
  UnitRational alpha;  // upper end
  UnitRational beta;   // lower end
};

Bracket bracket(const CubicGrade& a, const CubicGrade& b) {
  const auto& ap = a.ivf.hi();
  const auto& am = a.ivf.lo();
  const auto& bp = b.ivf.hi();
  const auto& bm = b.ivf.lo();
  return {std::min(std::max(ap, bm), std::max(am, bp)), std::max(std::min(ap, bm), std::min(am, bp))};
}

// alpha_open/beta_open as printed for each theorem
CellHypothesis in_bracket(const Bracket& br, const UnitRational& v, bool alpha_open,
                          bool beta_open, BracketInterpretation interp) {
  if (interp == BracketInterpretation::OpenOpen) alpha_open = beta_open = true;
  if (interp == BracketInterpretation::ClosedClosed) alpha_open = beta_open = false;
  if (br.alpha == br.beta && (alpha_open || beta_open)) return CellHypothesis::Vacuous;
  const bool above = beta_open ? br.beta < v : br.beta <= v;
  const bool below = alpha_open ? v < br.alpha : v <= br.alpha;
  return above && below ? CellHypothesis::Holds : CellHypothesis::Fails;
}

CellHypothesis from_bool(bool b) { return b ? CellHypothesis::Holds : CellHypothesis::Fails; }

bool both(const CubicGrade* f, const CubicGrade* g, bool (*pred)(const CubicGrade&)) {
  return (!f || pred(*f)) && (!g || pred(*g));
}

}  // namespace

bool is_internal(const CubicGrade& g) { return g.ivf.contains(g.fuzzy); }
bool is_external(const CubicGrade& g) { return !g.ivf.strictly_contains(g.fuzzy); }

Classification classify(const CubicSoftSet& f) {
  Classification out;
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      const auto& g = f.at(p, x);
      if (!is_internal(g)) out.internal_violations.push_back({f.parameters()[p], f.universe()[x]});
      if (!is_external(g)) out.external_violations.push_back({f.parameters()[p], f.universe()[x]});
    }
  }
  out.internal = out.internal_violations.empty();
  out.external = out.external_violations.empty();
  return out;
}

std::optional<Cell> theorem1_witness(const CubicSoftSet& f) {
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      const auto& g = f.at(p, x);
      if (g.ivf.strictly_contains(g.fuzzy)) return Cell{f.parameters()[p], f.universe()[x]};
    }
  }
  return std::nullopt;
}

BoundaryReport theorem2_boundary_check(const CubicSoftSet& f) {
  const auto c = classify(f);
  if (!c.internal || !c.external) {
    throw Error(ErrorKind::NotBothInternalExternal,
                std::string("set is") + (c.internal ? "" : " not internal") +
                    (c.internal || c.external ? "" : " and") + (c.external ? "" : " not external"));
  }
  BoundaryReport out;
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      const auto& lam = f.at(p, x).fuzzy;
      bool global = false;
      for (std::size_t y = 0; y < f.universe_size() && !global; ++y) {
        global = f.at(p, y).ivf.lo() == lam || f.at(p, y).ivf.hi() == lam;
      }
      const bool own = f.at(p, x).ivf.lo() == lam || f.at(p, x).ivf.hi() == lam;
      out.global_holds = out.global_holds && global;
      out.per_point_holds = out.per_point_holds && own;
      out.cells.push_back({{f.parameters()[p], f.universe()[x]}, global, own});
    }
  }
  return out;
}

std::span<const TheoremId> all_theorems() { return kTheorems; }

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T_PU_ICSS: return "T-PU-ICSS";
    case TheoremId::T_PI_ICSS: return "T-PI-ICSS";
    case TheoremId::T_COMP_ICSS: return "T-COMP-ICSS";
    case TheoremId::T_COMP_ECSS: return "T-COMP-ECSS";
    case TheoremId::T_RU_ICSS: return "T-RU-ICSS";
    case TheoremId::T_RI_ICSS: return "T-RI-ICSS";
    case TheoremId::T_STAR_PU_ICSS: return "T-STAR-PU-ICSS";
    case TheoremId::T_STAR_PI_ICSS: return "T-STAR-PI-ICSS";
    case TheoremId::T_STAR_PU_ECSS: return "T-STAR-PU-ECSS";
    case TheoremId::T_PI_ECSS: return "T-PI-ECSS";
    case TheoremId::T_PI_BOTH: return "T-PI-BOTH";
    case TheoremId::T_PU_ECSS: return "T-PU-ECSS";
    case TheoremId::T_RU_ECSS: return "T-RU-ECSS";
    case TheoremId::T_RI_ECSS: return "T-RI-ECSS";
    case TheoremId::T_RI_BOTH: return "T-RI-BOTH";
    case TheoremId::T_ICSS_RU_ECSS: return "T-ICSS-RU-ECSS";
    case TheoremId::T_ICSS_RI_ECSS: return "T-ICSS-RI-ECSS";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view text) {
  for (auto id : kTheorems) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

bool is_unary(TheoremId id) {
  return id == TheoremId::T_COMP_ICSS || id == TheoremId::T_COMP_ECSS;
}

bool needs_equal_parameters(TheoremId id) {
  return id == TheoremId::T_STAR_PU_ICSS || id == TheoremId::T_STAR_PI_ICSS ||
         id == TheoremId::T_STAR_PU_ECSS;
}

std::span<const BracketInterpretation> all_interpretations() { return kInterpretations; }

std::string_view to_string(BracketInterpretation interp) {
  switch (interp) {
    case BracketInterpretation::AsWritten: return "as-written";
    case BracketInterpretation::OpenOpen: return "open-open";
    case BracketInterpretation::ClosedClosed: return "closed-closed";
  }
  return "?";
}

std::optional<BracketInterpretation> interpretation_from_string(std::string_view text) {
  for (auto i : kInterpretations) {
    if (to_string(i) == text) return i;
  }
  return std::nullopt;
}

CellHypothesis cell_hypothesis(TheoremId id, const CubicGrade* f, const CubicGrade* g,
                               BracketInterpretation interp) {
  const bool shared = f && g;
  switch (id) {
    case TheoremId::T_COMP_ICSS: return from_bool(!f || is_internal(*f));
    case TheoremId::T_COMP_ECSS: return from_bool(!f || is_external(*f));

    case TheoremId::T_PU_ICSS:
    case TheoremId::T_PI_ICSS: return from_bool(both(f, g, is_internal));

    case TheoremId::T_RU_ICSS:
      if (!both(f, g, is_internal)) return CellHypothesis::Fails;
      return from_bool(!shared || std::max(f->ivf.lo(), g->ivf.lo()) <= std::min(f->fuzzy, g->fuzzy));
    case TheoremId::T_RI_ICSS:
      if (!both(f, g, is_internal)) return CellHypothesis::Fails;
      return from_bool(!shared || std::min(f->ivf.hi(), g->ivf.hi()) >= std::max(f->fuzzy, g->fuzzy));

    case TheoremId::T_ICSS_RU_ECSS:
      if (!both(f, g, is_internal)) return CellHypothesis::Fails;
      return from_bool(!shared || std::min(f->fuzzy, g->fuzzy) <= std::max(f->ivf.lo(), g->ivf.lo()));
    case TheoremId::T_ICSS_RI_ECSS:
      if (!both(f, g, is_internal)) return CellHypothesis::Fails;
      return from_bool(!shared || std::max(f->fuzzy, g->fuzzy) >= std::min(f->ivf.hi(), g->ivf.hi()));

    case TheoremId::T_STAR_PU_ICSS:
    case TheoremId::T_STAR_PI_ICSS:
    case TheoremId::T_STAR_PU_ECSS: {
      if (!shared) return CellHypothesis::Fails;
      const CubicGrade fs{f->ivf, g->fuzzy};
      const CubicGrade gs{g->ivf, f->fuzzy};
      if (!is_external(*f) || !is_external(*g)) return CellHypothesis::Fails;
      if (id == TheoremId::T_STAR_PU_ECSS) return from_bool(is_external(fs) && is_external(gs));
      return from_bool(is_internal(fs) && is_internal(gs));
    }

    case TheoremId::T_PI_ECSS:
    case TheoremId::T_RI_ECSS:
    case TheoremId::T_PU_ECSS:
    case TheoremId::T_RU_ECSS: {
      if (!both(f, g, is_external)) return CellHypothesis::Fails;
      if (!shared) return CellHypothesis::Holds;
      const bool meet = id == TheoremId::T_PI_ECSS || id == TheoremId::T_RU_ECSS;
      const auto v = meet ? std::min(f->fuzzy, g->fuzzy) : std::max(f->fuzzy, g->fuzzy);
      const bool alpha_closed = id == TheoremId::T_PI_ECSS || id == TheoremId::T_RI_ECSS;
      return in_bracket(bracket(*f, *g), v, !alpha_closed, alpha_closed, interp);
    }

    case TheoremId::T_PI_BOTH:
    case TheoremId::T_RI_BOTH: {
      if (!shared) return CellHypothesis::Holds;
      const auto br = bracket(*f, *g);
      const auto v = id == TheoremId::T_PI_BOTH ? std::min(f->fuzzy, g->fuzzy)
                                                : std::max(f->fuzzy, g->fuzzy);
      return from_bool(br.alpha == v && v == br.beta);
    }
  }
  return CellHypothesis::Fails;
}

HypothesisDetail hypothesis_detail(TheoremId id, const CubicSoftSet& f, const CubicSoftSet& g,
                                   BracketInterpretation interp) {
  HypothesisDetail out;
  auto note = [&](CellHypothesis h, const ParameterId& p, const std::string& x) {
    if (h == CellHypothesis::Holds) return;
    if (h == CellHypothesis::Vacuous) ++out.vacuous_cells;
    if (out.holds) out.first_failure = Cell{p, x};
    out.holds = false;
  };
  if (is_unary(id)) {
    for (std::size_t p = 0; p < f.parameter_count(); ++p) {
      for (std::size_t x = 0; x < f.universe_size(); ++x) {
        note(cell_hypothesis(id, &f.at(p, x), nullptr, interp), f.parameters()[p], f.universe()[x]);
      }
    }
    return out;
  }
  if (!same_universe(f, g)) {
    throw Error(ErrorKind::UniverseMismatch, "operands are graded over different universes");
  }
  if (needs_equal_parameters(id) && !same_parameters(f, g)) {
    throw Error(ErrorKind::ParameterSetMismatch,
                std::string(to_string(id)) + " needs identical parameter sets");
  }
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    const auto q = g.find_parameter(f.parameters()[p]);
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      const CubicGrade* gg = q ? &g.at(*q, *g.find_element(f.universe()[x])) : nullptr;
      note(cell_hypothesis(id, &f.at(p, x), gg, interp), f.parameters()[p], f.universe()[x]);
    }
  }
  for (std::size_t q = 0; q < g.parameter_count(); ++q) {
    if (f.find_parameter(g.parameters()[q])) continue;
    for (std::size_t x = 0; x < g.universe_size(); ++x) {
      note(cell_hypothesis(id, nullptr, &g.at(q, x), interp), g.parameters()[q], g.universe()[x]);
    }
  }
  return out;
}

bool hypothesis(TheoremId id, const CubicSoftSet& f, const CubicSoftSet& g,
                BracketInterpretation interp) {
  return hypothesis_detail(id, f, g, interp).holds;
}

bool hypothesis(TheoremId id, const CubicSoftSet& f) { return hypothesis_detail(id, f, f).holds; }

}  // namespace css

#include "css/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "css/algebra.hpp"
#include "css/document.hpp"
#include "css/error.hpp"

namespace css {

namespace {

using nlohmann::json;

enum class Need { Internal, External, Both };

struct Conclusion {
  enum { Combine, Complement } op;
  CombineKind kind;
  Need need;
};

Conclusion conclusion_of(TheoremId id) {
  using C = CombineKind;
  switch (id) {
    case TheoremId::T_PU_ICSS: return {Conclusion::Combine, C::P_UNION, Need::Internal};
    case TheoremId::T_PI_ICSS: return {Conclusion::Combine, C::P_INTERSECTION, Need::Internal};
    case TheoremId::T_COMP_ICSS: return {Conclusion::Complement, C::P_UNION, Need::Internal};
    case TheoremId::T_COMP_ECSS: return {Conclusion::Complement, C::P_UNION, Need::External};
    case TheoremId::T_RU_ICSS: return {Conclusion::Combine, C::R_UNION, Need::Internal};
    case TheoremId::T_RI_ICSS: return {Conclusion::Combine, C::R_INTERSECTION, Need::Internal};
    case TheoremId::T_STAR_PU_ICSS: return {Conclusion::Combine, C::P_UNION, Need::Internal};
    case TheoremId::T_STAR_PI_ICSS: return {Conclusion::Combine, C::P_INTERSECTION, Need::Internal};
    case TheoremId::T_STAR_PU_ECSS: return {Conclusion::Combine, C::P_UNION, Need::External};
    case TheoremId::T_PI_ECSS: return {Conclusion::Combine, C::P_INTERSECTION, Need::External};
    case TheoremId::T_PI_BOTH: return {Conclusion::Combine, C::P_INTERSECTION, Need::Both};
    case TheoremId::T_PU_ECSS: return {Conclusion::Combine, C::P_UNION, Need::External};
    case TheoremId::T_RU_ECSS: return {Conclusion::Combine, C::R_UNION, Need::External};
    case TheoremId::T_RI_ECSS: return {Conclusion::Combine, C::R_INTERSECTION, Need::External};
    case TheoremId::T_RI_BOTH: return {Conclusion::Combine, C::R_INTERSECTION, Need::Both};
    case TheoremId::T_ICSS_RU_ECSS: return {Conclusion::Combine, C::R_UNION, Need::External};
    case TheoremId::T_ICSS_RI_ECSS: return {Conclusion::Combine, C::R_INTERSECTION, Need::External};
  }
  return {Conclusion::Combine, C::P_UNION, Need::Internal};
}

struct Evaluation {
  TheoremVerdict verdict;
  bool vacuous = false;
};

Evaluation evaluate(TheoremId id, const CubicSoftSet& f, const CubicSoftSet& g,
                    BracketInterpretation interp) {
  const auto h = is_unary(id) ? hypothesis_detail(id, f, f, interp)
                              : hypothesis_detail(id, f, g, interp);
  const auto c = conclusion_of(id);
  const auto result = c.op == Conclusion::Complement ? soft_complement(f)
                                                     : soft_combine(c.kind, f, g);
  Evaluation out;
  out.vacuous = h.vacuous_cells > 0;
  out.verdict.hypothesis = h.holds;
  std::optional<Cell> bad;
  for (std::size_t p = 0; p < result.parameter_count() && !bad; ++p) {
    for (std::size_t x = 0; x < result.universe_size() && !bad; ++x) {
      const auto& gr = result.at(p, x);
      const bool ok = (c.need == Need::External || is_internal(gr)) &&
                      (c.need == Need::Internal || is_external(gr));
      if (!ok) bad = Cell{result.parameters()[p], result.universe()[x]};
    }
  }
  out.verdict.conclusion = !bad;
  if (h.holds && bad) out.verdict.witness = bad;
  return out;
}

std::vector<std::string> labels(const char* prefix, unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

struct Shape {
  std::vector<std::string> universe;
  std::vector<ParameterId> f_params;
  std::vector<ParameterId> g_params;
  std::size_t shared = 0;  // leading parameters common to both
};

Shape make_shape(TheoremId id, unsigned universe_size, unsigned shared, unsigned exclusive) {
  if (needs_equal_parameters(id) && exclusive > 0) {
    throw Error(ErrorKind::ParameterSetMismatch,
                std::string(to_string(id)) + " needs identical parameter sets");
  }
  Shape s;
  s.universe = labels("x", universe_size);
  s.shared = shared;
  for (const auto& n : labels("e", shared)) {
    s.f_params.push_back({n, false});
    s.g_params.push_back({n, false});
  }
  for (const auto& n : labels("a", exclusive)) s.f_params.push_back({n, false});
  if (!is_unary(id)) {
    for (const auto& n : labels("b", exclusive)) s.g_params.push_back({n, false});
  } else {
    s.g_params.clear();
  }
  return s;
}

struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t hyp = 0;
  std::uint64_t concl = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t counterexamples = 0;
  std::vector<Counterexample> kept;
  std::uint64_t draws = 0;
  std::uint64_t rejections = 0;
  std::uint64_t gave_up = 0;

  void record(TheoremId id, const CubicSoftSet& f, const CubicSoftSet& g, BracketInterpretation interp) {
    const auto e = evaluate(id, f, g, interp);
    ++instances;
    if (e.vacuous) ++vacuous;
    if (!e.verdict.hypothesis) return;
    ++hyp;
    if (e.verdict.conclusion) {
      ++concl;
      return;
    }
    ++counterexamples;
    if (kept.size() < kCounterexampleCap) {
      kept.push_back({f, is_unary(id) ? std::nullopt : std::optional<CubicSoftSet>(g), *e.verdict.witness});
    }
  }

  void merge(Tally&& o) {
    instances += o.instances;
    hyp += o.hyp;
    concl += o.concl;
    vacuous += o.vacuous;
    counterexamples += o.counterexamples;
    draws += o.draws;
    rejections += o.rejections;
    gave_up += o.gave_up;
    for (auto& c : o.kept) {
      if (kept.size() >= kCounterexampleCap) break;
      kept.push_back(std::move(c));
    }
  }
};

// Runs chunk(i) for i in [0, chunks) on a pool; merges in index order.
template <class Fn>
Tally run_chunks(std::uint64_t chunks, unsigned threads, Fn chunk) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));
  std::vector<Tally> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < chunks && !failed; i = next++) {
      try {
        parts[i] = chunk(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

void fill_report(CampaignReport& r, Tally&& t) {
  r.instances_tested = t.instances;
  r.hypothesis_holds = t.hyp;
  r.conclusion_holds_given_hypothesis = t.concl;
  r.vacuous_instances = t.vacuous;
  r.counterexample_count = t.counterexamples;
  r.counterexamples = std::move(t.kept);
  r.cell_draws = t.draws;
  r.cell_rejections = t.rejections;
  r.cells_gave_up = t.gave_up;
}

UnitRational grid_value(std::uint64_t i, unsigned k) { return UnitRational::from_ratio(i, k); }

unsigned grid_units(const UnitRational& v, unsigned k) {
  return static_cast<unsigned>(v.numerator() * (k / v.denominator()));
}

constexpr unsigned kCellRetryCap = 10000;

}  // namespace

std::vector<CubicGrade> enumerate_grades(unsigned k) {
  std::vector<CubicGrade> out;
  out.reserve(static_cast<std::size_t>(k + 1) * (k + 2) / 2 * (k + 1));
  for (unsigned lo = 0; lo <= k; ++lo) {
    for (unsigned hi = lo; hi <= k; ++hi) {
      for (unsigned d = 0; d <= k; ++d) {
        out.push_back(make_grade(grid_value(lo, k), grid_value(hi, k), grid_value(d, k)));
      }
    }
  }
  return out;
}

TheoremVerdict check_theorem(TheoremId id, const CubicSoftSet& f, const CubicSoftSet& g,
                             BracketInterpretation interp) {
  return evaluate(id, f, g, interp).verdict;
}

std::uint64_t campaign_cap() {
  if (const char* env = std::getenv("CSS_MAX_CAMPAIGN")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultCampaignCap;
}

CampaignReport run_campaign(TheoremId id, const ExhaustiveMode& mode, BracketInterpretation interp,
                            unsigned threads) {
  const auto& grid = mode.grid;
  if (grid.steps == 0) throw Error(ErrorKind::CampaignTooLarge, "grid needs at least one step");
  const auto shape = make_shape(id, grid.universe_size, grid.shared_params, grid.exclusive_params);
  const auto grades = enumerate_grades(grid.steps);
  const std::size_t f_cells = shape.f_params.size() * shape.universe.size();
  const std::size_t g_cells = shape.g_params.size() * shape.universe.size();
  const std::uint64_t cap = campaign_cap();
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < f_cells + g_cells; ++c) {
    if (total > cap / grades.size()) {
      throw Error(ErrorKind::CampaignTooLarge,
                  std::to_string(grades.size()) + "^" + std::to_string(f_cells + g_cells) +
                      " instances exceed the cap of " + std::to_string(cap));
    }
    total *= grades.size();
  }
  if (total > cap) throw Error(ErrorKind::CampaignTooLarge, "instance count exceeds the cap");

  const std::uint64_t chunk_size = std::max<std::uint64_t>(1024, total / 4096);
  const std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;
  auto tally = run_chunks(chunks, threads, [&](std::uint64_t c) {
    Tally t;
    std::vector<CubicGrade> fg(f_cells, grades[0]);
    std::vector<CubicGrade> gg(g_cells, grades[0]);
    const std::uint64_t end = std::min(total, (c + 1) * chunk_size);
    for (std::uint64_t i = c * chunk_size; i < end; ++i) {
      // mixed radix, F's first cell most significant
      std::uint64_t rest = i;
      for (std::size_t j = g_cells; j-- > 0;) {
        gg[j] = grades[rest % grades.size()];
        rest /= grades.size();
      }
      for (std::size_t j = f_cells; j-- > 0;) {
        fg[j] = grades[rest % grades.size()];
        rest /= grades.size();
      }
      const CubicSoftSet f(shape.universe, shape.f_params, fg);
      const CubicSoftSet g(shape.universe, shape.g_params, gg);
      t.record(id, f, g, interp);
    }
    return t;
  });
  CampaignReport r;
  r.theorem = id;
  r.interpretation = interp;
  r.exhaustive = mode;
  fill_report(r, std::move(tally));
  return r;
}

CampaignReport run_campaign(TheoremId id, const RandomMode& mode, BracketInterpretation interp,
                            unsigned threads) {
  const auto shape = make_shape(id, mode.universe_size, mode.shared_params, mode.exclusive_params);
  const std::size_t u = shape.universe.size();
  const std::uint64_t chunk_size = 1024;
  const std::uint64_t chunks = (mode.samples + chunk_size - 1) / chunk_size;
  auto tally = run_chunks(chunks, threads, [&](std::uint64_t c) {
    Tally t;
    Rng rng(splitmix64(mode.seed ^ splitmix64(c + 1)));
    const bool unary = is_unary(id);
    // draws one cell until its hypothesis holds (or the cap runs out)
    auto draw = [&](CubicGrade* f, CubicGrade* g) {
      for (unsigned attempt = 0;; ++attempt) {
        if (f) *f = random_grade(rng);
        if (g) *g = random_grade(rng);
        ++t.draws;
        if (!mode.constrained) return;
        if (cell_hypothesis(id, f, g, interp) == CellHypothesis::Holds) return;
        ++t.rejections;
        if (attempt + 1 >= kCellRetryCap) {
          ++t.gave_up;
          return;
        }
      }
    };
    const CubicGrade zero = make_grade(UnitRational::zero(), UnitRational::zero(), UnitRational::zero());
    std::vector<CubicGrade> fg(shape.f_params.size() * u, zero);
    std::vector<CubicGrade> gg(shape.g_params.size() * u, zero);
    const std::uint64_t end = std::min(mode.samples, (c + 1) * chunk_size);
    for (std::uint64_t i = c * chunk_size; i < end; ++i) {
      for (std::size_t p = 0; p < shape.f_params.size(); ++p) {
        for (std::size_t x = 0; x < u; ++x) {
          const bool shared = !unary && p < shape.shared;
          draw(&fg[p * u + x], shared ? &gg[p * u + x] : nullptr);
        }
      }
      if (!unary) {
        for (std::size_t p = shape.shared; p < shape.g_params.size(); ++p) {
          for (std::size_t x = 0; x < u; ++x) draw(nullptr, &gg[p * u + x]);
        }
      }
      const CubicSoftSet f(shape.universe, shape.f_params, fg);
      const CubicSoftSet g(shape.universe, shape.g_params, gg);
      t.record(id, f, g, interp);
    }
    return t;
  });
  CampaignReport r;
  r.theorem = id;
  r.interpretation = interp;
  r.random = mode;
  fill_report(r, std::move(tally));
  return r;
}

json report_to_json(const CampaignReport& r) {
  json doc = json::object();
  doc["theorem"] = std::string(to_string(r.theorem));
  doc["interpretation"] = std::string(to_string(r.interpretation));
  if (r.exhaustive) {
    const auto& g = r.exhaustive->grid;
    doc["mode"] = {{"kind", "exhaustive"},
                   {"steps", g.steps},
                   {"universe_size", g.universe_size},
                   {"shared_params", g.shared_params},
                   {"exclusive_params", g.exclusive_params}};
  } else if (r.random) {
    const auto& m = *r.random;
    doc["mode"] = {{"kind", "random"},
                   {"samples", m.samples},
                   {"seed", m.seed},
                   {"steps", kRandomGridSteps},
                   {"universe_size", m.universe_size},
                   {"shared_params", m.shared_params},
                   {"exclusive_params", m.exclusive_params},
                   {"constrained", m.constrained}};
    if (m.constrained) {
      doc["rejection"] = {
          {"cell_draws", r.cell_draws},
          {"cell_rejections", r.cell_rejections},
          {"cells_gave_up", r.cells_gave_up},
          {"rate", r.cell_draws == 0 ? std::string("0")
                                     : UnitRational::from_ratio(r.cell_rejections, r.cell_draws).to_string()}};
    }
  }
  doc["instances_tested"] = r.instances_tested;
  doc["hypothesis_holds"] = r.hypothesis_holds;
  doc["conclusion_holds_given_hypothesis"] = r.conclusion_holds_given_hypothesis;
  doc["vacuous_instances"] = r.vacuous_instances;
  doc["counterexample_count"] = r.counterexample_count;
  doc["counterexamples"] = json::array();
  for (const auto& c : r.counterexamples) {
    doc["counterexamples"].push_back({{"f", to_json(c.f)},
                                      {"g", c.g ? to_json(*c.g) : json(nullptr)},
                                      {"witness", {{"parameter", c.witness.parameter.key()},
                                                   {"element", c.witness.element}}}});
  }
  return doc;
}

std::string serialize_report(const CampaignReport& report) { return report_to_json(report).dump(2) + "\n"; }

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CubicGrade random_grade(Rng& rng, unsigned k) {
  for (;;) {
    const auto lo = rng.below(k + 1);
    const auto hi = rng.below(k + 1);
    if (lo > hi) continue;
    return make_grade(grid_value(lo, k), grid_value(hi, k), grid_value(rng.below(k + 1), k));
  }
}

CubicSoftSet random_soft_set(Rng& rng, const std::vector<std::string>& universe,
                             const std::vector<ParameterId>& pool, unsigned k) {
  std::vector<ParameterId> params;
  for (const auto& p : pool) {
    if (rng.coin()) params.push_back(p);
  }
  std::vector<CubicGrade> grades;
  for (std::size_t i = 0; i < params.size() * universe.size(); ++i) grades.push_back(random_grade(rng, k));
  return CubicSoftSet(universe, std::move(params), std::move(grades));
}

CubicSoftSet random_document(Rng& rng) {
  static const std::vector<std::string> names{
      "e1", "e2", "p 3", "\xC2\xAC" "e1", "\\e2", "(e1,e2)", "", "x\"y", "\xCE\xBB", "long-name_7"};
  static const std::uint64_t dens[]{1, 2, 3, 4, 5, 7, 8, 10, 12, 100, 1000, 999983};
  std::vector<std::string> universe;
  const auto usize = rng.below(5);
  while (universe.size() < usize) {
    auto n = names[rng.below(names.size())];
    if (std::find(universe.begin(), universe.end(), n) == universe.end()) universe.push_back(n);
  }
  std::vector<ParameterId> params;
  const auto psize = rng.below(5);
  while (params.size() < psize) {
    ParameterId p{names[rng.below(names.size())], rng.coin()};
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  }
  auto value = [&] {
    const auto d = dens[rng.below(std::size(dens))];
    return UnitRational::from_ratio(rng.below(d + 1), d);
  };
  std::vector<CubicGrade> grades;
  for (std::size_t i = 0; i < universe.size() * params.size(); ++i) {
    auto a = value();
    auto b = value();
    if (b < a) std::swap(a, b);
    grades.push_back(make_grade(a, b, value()));
  }
  return CubicSoftSet(std::move(universe), std::move(params), std::move(grades));
}

namespace {

// F' ⊆ F in the given order, built by shrinking on the grid.
CubicSoftSet shrink(Rng& rng, const CubicSoftSet& f, OrderKind kind, bool drop_params, unsigned k) {
  std::vector<ParameterId> params;
  std::vector<CubicGrade> grades;
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    if (drop_params && rng.below(4) == 0) continue;
    params.push_back(f.parameters()[p]);
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      const auto& g = f.at(p, x);
      const auto lo = grid_units(g.ivf.lo(), k);
      const auto hi = grid_units(g.ivf.hi(), k);
      const auto d = grid_units(g.fuzzy, k);
      const auto lo2 = rng.below(lo + 1);
      const auto hi2 = lo2 + rng.below(hi - lo2 + 1);
      const auto d2 = kind == OrderKind::P ? rng.below(d + 1) : d + rng.below(k - d + 1);
      grades.push_back(make_grade(grid_value(lo2, k), grid_value(hi2, k), grid_value(d2, k)));
    }
  }
  return CubicSoftSet({f.universe().begin(), f.universe().end()}, std::move(params), std::move(grades));
}

// F ⊆ F', possibly with extra parameters drawn from pool.
CubicSoftSet grow(Rng& rng, const CubicSoftSet& f, OrderKind kind, const std::vector<ParameterId>& pool,
                  unsigned k) {
  std::vector<ParameterId> params;
  std::vector<CubicGrade> grades;
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    params.push_back(f.parameters()[p]);
    for (std::size_t x = 0; x < f.universe_size(); ++x) {
      const auto& g = f.at(p, x);
      const auto lo = grid_units(g.ivf.lo(), k);
      const auto hi = grid_units(g.ivf.hi(), k);
      const auto d = grid_units(g.fuzzy, k);
      const auto hi2 = hi + rng.below(k - hi + 1);
      const auto lo2 = lo + rng.below(hi2 - lo + 1);
      const auto d2 = kind == OrderKind::P ? d + rng.below(k - d + 1) : rng.below(d + 1);
      grades.push_back(make_grade(grid_value(lo2, k), grid_value(hi2, k), grid_value(d2, k)));
    }
  }
  for (const auto& p : pool) {
    if (f.find_parameter(p) || !rng.coin()) continue;
    params.push_back(p);
    for (std::size_t x = 0; x < f.universe_size(); ++x) grades.push_back(random_grade(rng, k));
  }
  return CubicSoftSet({f.universe().begin(), f.universe().end()}, std::move(params), std::move(grades));
}

std::vector<ParameterId> default_pool() {
  return {{"e1", false}, {"e2", false}, {"e3", false}, {"e4", false}};
}

std::vector<std::string> random_universe(Rng& rng) { return labels("x", 1 + static_cast<unsigned>(rng.below(3))); }

}  // namespace

std::vector<SuiteResult> proposition_suite(std::uint64_t samples, std::uint64_t seed) {
  const unsigned k = kRandomGridSteps;
  const auto pool = default_pool();
  std::vector<SuiteResult> out;
  Rng rng(seed);
  for (const auto kind : {OrderKind::P, OrderKind::R}) {
    const bool p = kind == OrderKind::P;
    const auto uni = p ? CombineKind::P_UNION : CombineKind::R_UNION;
    const auto meet = p ? CombineKind::P_INTERSECTION : CombineKind::R_INTERSECTION;
    const std::string tag = p ? "P" : "R";
    auto sub = [&](const CubicSoftSet& a, const CubicSoftSet& b) { return soft_suborder(kind, a, b); };

    SuiteResult trans{tag + "-order transitivity"};
    SuiteResult anti{tag + "-order complement reversal (I=J)"};
    SuiteResult lower{tag + "-intersection is a lower bound"};
    SuiteResult upper{tag + "-union is an upper bound"};
    SuiteResult mono{tag + "-union and " + tag + "-intersection monotone"};
    auto tick = [](SuiteResult& r, bool ok) { ++(ok ? r.passed : r.failed); };

    for (std::uint64_t s = 0; s < samples; ++s) {
      const auto universe = random_universe(rng);
      {
        const auto g = random_soft_set(rng, universe, pool, k);
        const auto f = shrink(rng, g, kind, true, k);
        const auto h = grow(rng, g, kind, pool, k);
        tick(trans, sub(f, g) && sub(g, h) && sub(f, h));
      }
      {
        const auto g = random_soft_set(rng, universe, pool, k);
        const auto f = shrink(rng, g, kind, false, k);
        tick(anti, same_parameters(f, g) && sub(f, g) && sub(soft_complement(g), soft_complement(f)));
      }
      {
        const auto f = random_soft_set(rng, universe, pool, k);
        const auto g = grow(rng, f, kind, pool, k);
        const auto e = grow(rng, f, kind, pool, k);
        tick(lower, sub(f, g) && sub(f, e) && sub(f, soft_combine(meet, g, e)));
      }
      {
        const auto g = random_soft_set(rng, universe, pool, k);
        const auto f = shrink(rng, g, kind, true, k);
        const auto e = shrink(rng, g, kind, true, k);
        tick(upper, sub(f, g) && sub(e, g) && sub(soft_combine(uni, f, e), g));
      }
      {
        const auto g = random_soft_set(rng, universe, pool, k);
        const auto h = random_soft_set(rng, universe, pool, k);
        const auto f = shrink(rng, g, kind, true, k);
        const auto e = shrink(rng, h, kind, true, k);
        tick(mono, sub(f, g) && sub(e, h) && sub(soft_combine(uni, f, e), soft_combine(uni, g, h)) &&
                       sub(soft_combine(meet, f, e), soft_combine(meet, g, h)));
      }
    }
    for (auto* r : {&trans, &anti, &lower, &upper, &mono}) out.push_back(*r);
  }
  return out;
}

std::vector<SuiteResult> law_suite(std::uint64_t samples, std::uint64_t seed) {
  const auto pool = default_pool();
  constexpr CombineKind kinds[]{CombineKind::P_UNION, CombineKind::P_INTERSECTION, CombineKind::R_UNION,
                                CombineKind::R_INTERSECTION};
  constexpr const char* names[]{"P-union", "P-intersection", "R-union", "R-intersection"};
  std::vector<SuiteResult> comm, idem;
  for (const auto* n : names) {
    comm.push_back({std::string("commutativity ") + n});
    idem.push_back({std::string("idempotence ") + n});
  }
  SuiteResult dm_p{"grade De Morgan P"};
  SuiteResult dm_r{"grade De Morgan R"};
  SuiteResult inv{"complement involution"};
  SuiteResult star{"star-swap involution"};
  auto tick = [](SuiteResult& r, bool ok) { ++(ok ? r.passed : r.failed); };

  Rng rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto universe = random_universe(rng);
    const auto f = random_soft_set(rng, universe, pool);
    const auto g = random_soft_set(rng, universe, pool);
    for (std::size_t i = 0; i < 4; ++i) {
      tick(comm[i], soft_equal(soft_combine(kinds[i], f, g), soft_combine(kinds[i], g, f)));
      tick(idem[i], soft_equal(soft_combine(kinds[i], f, f), f));
    }
    const auto a = random_grade(rng);
    const auto b = random_grade(rng);
    const auto ca = grade_complement(a);
    const auto cb = grade_complement(b);
    tick(dm_p, grade_complement(grade_combine(CombineKind::P_UNION, a, b)) ==
                       grade_combine(CombineKind::P_INTERSECTION, ca, cb) &&
                   grade_complement(grade_combine(CombineKind::P_INTERSECTION, a, b)) ==
                       grade_combine(CombineKind::P_UNION, ca, cb));
    tick(dm_r, grade_complement(grade_combine(CombineKind::R_UNION, a, b)) ==
                       grade_combine(CombineKind::R_INTERSECTION, ca, cb) &&
                   grade_complement(grade_combine(CombineKind::R_INTERSECTION, a, b)) ==
                       grade_combine(CombineKind::R_UNION, ca, cb));
    tick(inv, soft_complement(soft_complement(f)) == f);
    std::vector<CubicGrade> other;
    for (std::size_t i = 0; i < f.grades().size(); ++i) other.push_back(random_grade(rng));
    const CubicSoftSet h(universe, {f.parameters().begin(), f.parameters().end()}, std::move(other));
    const auto [fs, hs] = star_swap(f, h);
    const auto [f2, h2] = star_swap(fs, hs);
    tick(star, f2 == f && h2 == h);
  }
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < 4; ++i) out.push_back(comm[i]);
  for (std::size_t i = 0; i < 4; ++i) out.push_back(idem[i]);
  for (auto* r : {&dm_p, &dm_r, &inv, &star}) out.push_back(*r);
  return out;
}

}  // namespace css

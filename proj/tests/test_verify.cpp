#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "css/algebra.hpp"
#include "css/classify.hpp"
#include "css/document.hpp"
#include "css/error.hpp"
#include "css/verify.hpp"
#include "test_util.hpp"

using namespace css;
using T = TheoremId;

namespace {

// Grades as integers on the grid 0..k, checked straight from the definitions.
struct C {
  int lo, hi, d;
};

bool internal(const C& c) { return c.lo <= c.d && c.d <= c.hi; }
bool external(const C& c) { return !(c.lo < c.d && c.d < c.hi); }

std::vector<C> grid(int k) {
  std::vector<C> out;
  for (int lo = 0; lo <= k; ++lo)
    for (int hi = lo; hi <= k; ++hi)
      for (int d = 0; d <= k; ++d) out.push_back({lo, hi, d});
  return out;
}

enum Op { PU, PI, RU, RI, COMP };

Op op_of(T id) {
  switch (id) {
    case T::T_PU_ICSS: case T::T_STAR_PU_ICSS: case T::T_STAR_PU_ECSS: case T::T_PU_ECSS: return PU;
    case T::T_PI_ICSS: case T::T_STAR_PI_ICSS: case T::T_PI_ECSS: case T::T_PI_BOTH: return PI;
    case T::T_RU_ICSS: case T::T_RU_ECSS: case T::T_ICSS_RU_ECSS: return RU;
    case T::T_RI_ICSS: case T::T_RI_ECSS: case T::T_RI_BOTH: case T::T_ICSS_RI_ECSS: return RI;
    default: return COMP;
  }
}

C apply(Op op, const C& a, const C& b, int k) {
  switch (op) {
    case PU: return {std::max(a.lo, b.lo), std::max(a.hi, b.hi), std::max(a.d, b.d)};
    case PI: return {std::min(a.lo, b.lo), std::min(a.hi, b.hi), std::min(a.d, b.d)};
    case RU: return {std::max(a.lo, b.lo), std::max(a.hi, b.hi), std::min(a.d, b.d)};
    case RI: return {std::min(a.lo, b.lo), std::min(a.hi, b.hi), std::max(a.d, b.d)};
    case COMP: return {k - a.hi, k - a.lo, k - a.d};
  }
  return a;
}

bool concl_ok(T id, const C& r) {
  switch (id) {
    case T::T_PU_ICSS: case T::T_PI_ICSS: case T::T_COMP_ICSS: case T::T_RU_ICSS: case T::T_RI_ICSS:
    case T::T_STAR_PU_ICSS: case T::T_STAR_PI_ICSS:
      return internal(r);
    case T::T_PI_BOTH: case T::T_RI_BOTH: return internal(r) && external(r);
    default: return external(r);
  }
}

// precondition on a cell present in only one operand
bool hyp_alone(T id, const C& a) {
  switch (id) {
    case T::T_PI_BOTH: case T::T_RI_BOTH: return true;
    case T::T_COMP_ECSS: case T::T_PI_ECSS: case T::T_PU_ECSS: case T::T_RU_ECSS: case T::T_RI_ECSS:
    case T::T_STAR_PU_ICSS: case T::T_STAR_PI_ICSS: case T::T_STAR_PU_ECSS:
      return external(a);
    default: return internal(a);
  }
}

bool hyp_shared(T id, const C& a, const C& b, BracketInterpretation interp) {
  const int alpha = std::min(std::max(a.hi, b.lo), std::max(a.lo, b.hi));
  const int beta = std::max(std::min(a.hi, b.lo), std::min(a.lo, b.hi));
  const int lmin = std::min(a.d, b.d);
  const int lmax = std::max(a.d, b.d);
  auto inside = [&](int v, bool alpha_open, bool beta_open) {
    if (interp == BracketInterpretation::OpenOpen) alpha_open = beta_open = true;
    if (interp == BracketInterpretation::ClosedClosed) alpha_open = beta_open = false;
    const bool lower = beta_open ? beta < v : beta <= v;
    const bool upper = alpha_open ? v < alpha : v <= alpha;
    return lower && upper;
  };
  const bool ii = internal(a) && internal(b);
  const bool ee = external(a) && external(b);
  switch (id) {
    case T::T_PU_ICSS: case T::T_PI_ICSS: return ii;
    case T::T_RU_ICSS: return ii && std::max(a.lo, b.lo) <= lmin;
    case T::T_RI_ICSS: return ii && std::min(a.hi, b.hi) >= lmax;
    case T::T_ICSS_RU_ECSS: return ii && lmin <= std::max(a.lo, b.lo);
    case T::T_ICSS_RI_ECSS: return ii && lmax >= std::min(a.hi, b.hi);
    case T::T_STAR_PU_ICSS: case T::T_STAR_PI_ICSS:
      return ee && internal({a.lo, a.hi, b.d}) && internal({b.lo, b.hi, a.d});
    case T::T_STAR_PU_ECSS: return ee && external({a.lo, a.hi, b.d}) && external({b.lo, b.hi, a.d});
    case T::T_PI_ECSS: return ee && inside(lmin, false, true);
    case T::T_RI_ECSS: return ee && inside(lmax, false, true);
    case T::T_PU_ECSS: return ee && inside(lmax, true, false);
    case T::T_RU_ECSS: return ee && inside(lmin, true, false);
    case T::T_PI_BOTH: return alpha == lmin && lmin == beta;
    case T::T_RI_BOTH: return alpha == lmax && lmax == beta;
    default: return false;
  }
}

struct Counts {
  std::uint64_t instances = 0, hyp = 0, concl = 0;
};

// Shape: `shared` common cells, `only` cells in each operand alone.
Counts oracle(T id, int k, int shared, int only, BracketInterpretation interp) {
  const auto cells = grid(k);
  const bool unary = is_unary(id);
  const int f_cells = shared + only;
  const int g_cells = unary ? 0 : shared + only;
  const int n = f_cells + g_cells;
  std::vector<std::size_t> idx(n, 0);
  Counts out;
  for (;;) {
    auto f = [&](int i) { return cells[idx[i]]; };
    auto g = [&](int i) { return cells[idx[f_cells + i]]; };
    bool h = true;
    bool c = true;
    if (unary) {
      for (int i = 0; i < f_cells; ++i) {
        h = h && hyp_alone(id, f(i));
        c = c && concl_ok(id, apply(COMP, f(i), f(i), k));
      }
    } else {
      const Op op = op_of(id);
      const bool uni = op == PU || op == RU;
      for (int i = 0; i < shared; ++i) {
        h = h && hyp_shared(id, f(i), g(i), interp);
        c = c && concl_ok(id, apply(op, f(i), g(i), k));
      }
      for (int i = shared; i < f_cells; ++i) {
        h = h && hyp_alone(id, f(i)) && hyp_alone(id, g(i));
        if (uni) c = c && concl_ok(id, f(i)) && concl_ok(id, g(i));
      }
    }
    ++out.instances;
    if (h) ++out.hyp;
    if (h && c) ++out.concl;
    int j = n - 1;
    while (j >= 0 && ++idx[j] == cells.size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

void check_against_oracle(T id, const GridSpec& spec, BracketInterpretation interp) {
  const auto report = run_campaign(id, ExhaustiveMode{spec}, interp, 2);
  const int shared = static_cast<int>(spec.universe_size * spec.shared_params);
  const int only = static_cast<int>(spec.universe_size * spec.exclusive_params);
  const auto want = oracle(id, static_cast<int>(spec.steps), shared, only, interp);
  CAPTURE(to_string(id));
  CAPTURE(to_string(interp));
  CHECK(report.instances_tested == want.instances);
  CHECK(report.hypothesis_holds == want.hyp);
  CHECK(report.conclusion_holds_given_hypothesis == want.concl);
  CHECK(report.counterexample_count == want.hyp - want.concl);
}

}  // namespace

TEST_CASE("enumerate_grades") {
  CHECK(enumerate_grades(1).size() == 6);
  CHECK(enumerate_grades(2).size() == 18);
  CHECK(enumerate_grades(4).size() == 75);
  for (unsigned k = 1; k <= 6; ++k) {
    const auto gs = enumerate_grades(k);
    CHECK(gs.size() == (k + 1) * (k + 2) / 2 * (k + 1));
    std::set<std::string> seen;
    for (const auto& g : gs) {
      seen.insert(g.ivf.lo().to_string() + g.ivf.hi().to_string() + "|" + g.fuzzy.to_string());
    }
    CHECK(seen.size() == gs.size());
  }
  const auto k1 = enumerate_grades(1);
  CHECK(k1.front() == G("0", "0", "0"));
  CHECK(k1[1] == G("0", "0", "1"));
  CHECK(k1.back() == G("1", "1", "1"));
}

TEST_CASE("oracle numbers on the k=2 single-cell grid") {
  const auto aw = BracketInterpretation::AsWritten;
  CHECK(oracle(T::T_PU_ICSS, 2, 1, 0, aw).hyp == 100);
  CHECK(oracle(T::T_RI_ICSS, 2, 1, 0, aw).hyp == 68);
  CHECK(oracle(T::T_ICSS_RU_ECSS, 2, 1, 0, aw).hyp == 88);
  CHECK(oracle(T::T_STAR_PU_ICSS, 2, 1, 0, aw).hyp == 77);
  CHECK(oracle(T::T_STAR_PU_ECSS, 2, 1, 0, aw).hyp == 269);
  CHECK(oracle(T::T_PI_BOTH, 2, 1, 0, aw).hyp == 57);
  CHECK(oracle(T::T_PI_ECSS, 2, 1, 0, aw).hyp == 33);
  CHECK(oracle(T::T_RU_ECSS, 2, 1, 0, aw).hyp == 69);
  CHECK(oracle(T::T_COMP_ECSS, 2, 1, 0, aw).hyp == 17);
  const auto cc = oracle(T::T_PI_ECSS, 2, 1, 0, BracketInterpretation::ClosedClosed);
  CHECK(cc.hyp == 147);
  CHECK(cc.concl == 145);
}

TEST_CASE("campaigns match the oracle: k=2, one cell") {
  for (auto id : all_theorems()) {
    for (auto interp : all_interpretations()) check_against_oracle(id, {2, 1, 1, 0}, interp);
  }
}

TEST_CASE("campaigns match the oracle: k=1, two elements") {
  for (auto id : all_theorems()) check_against_oracle(id, {1, 2, 1, 0}, BracketInterpretation::AsWritten);
}

TEST_CASE("campaigns match the oracle: k=1, exclusive parameters") {
  for (auto id : all_theorems()) {
    if (needs_equal_parameters(id)) continue;
    check_against_oracle(id, {1, 1, 1, 1}, BracketInterpretation::AsWritten);
  }
}

TEST_CASE("clean theorems have no counterexamples at k=1 and k=2") {
  for (auto id : {T::T_PU_ICSS, T::T_PI_ICSS, T::T_COMP_ICSS, T::T_COMP_ECSS, T::T_RU_ICSS, T::T_RI_ICSS,
                  T::T_ICSS_RU_ECSS, T::T_ICSS_RI_ECSS}) {
    for (unsigned k : {1u, 2u}) {
      const auto r = run_campaign(id, ExhaustiveMode{{k, 1, 1, 0}}, BracketInterpretation::AsWritten);
      CAPTURE(to_string(id));
      CHECK(r.counterexample_count == 0);
      CHECK(r.hypothesis_holds > 0);
    }
  }
}

TEST_CASE("complement campaign at k=4") {
  const auto r = run_campaign(T::T_COMP_ICSS, ExhaustiveMode{{4, 1, 1, 0}}, BracketInterpretation::AsWritten);
  CHECK(r.instances_tested == 75);
  CHECK(r.counterexample_count == 0);
}

TEST_CASE("copied cells break the internal-to-external R-union theorem") {
  const auto r = run_campaign(T::T_ICSS_RU_ECSS, ExhaustiveMode{{2, 1, 1, 1}}, BracketInterpretation::AsWritten);
  CHECK(r.counterexample_count > 0);
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples[0].witness.parameter.name != "e1");
}

TEST_CASE("check_theorem examples") {
  const auto icss = load_fixture("icss_example.json");
  auto v = check_theorem(T::T_PU_ICSS, icss, icss);
  CHECK(v.hypothesis);
  CHECK(v.conclusion);
  CHECK_FALSE(v.witness);

  const auto f = load_fixture("star_f.json");
  const auto g = load_fixture("star_g.json");
  v = check_theorem(T::T_STAR_PU_ICSS, f, g);
  CHECK(v.hypothesis);
  CHECK(v.conclusion);
  CHECK(soft_combine(CombineKind::P_UNION, f, g).grade({"e1", false}, "p1") == G("0.4", "0.6", "0.5"));

  const auto ecss = load_fixture("ecss_example.json");
  v = check_theorem(T::T_COMP_ECSS, ecss, ecss);
  CHECK(v.hypothesis);
  CHECK(v.conclusion);
  // complement by hand: [1-hi, 1-lo], 1-lambda, then external everywhere
  for (std::size_t p = 0; p < ecss.parameter_count(); ++p) {
    for (std::size_t x = 0; x < ecss.universe_size(); ++x) {
      const auto& c = ecss.at(p, x);
      const auto lo = c.ivf.hi().complement();
      const auto hi = c.ivf.lo().complement();
      const auto d = c.fuzzy.complement();
      CHECK_FALSE((lo < d && d < hi));
    }
  }
}

TEST_CASE("verdict witness present exactly on counterexamples") {
  const auto grades = enumerate_grades(2);
  for (auto id : all_theorems()) {
    for (const auto& a : grades) {
      for (const auto& b : grades) {
        const CubicSoftSet f({"x"}, {{"e", false}}, {a});
        const CubicSoftSet g({"x"}, {{"e", false}}, {b});
        const auto v = check_theorem(id, f, g, BracketInterpretation::ClosedClosed);
        CHECK(v.witness.has_value() == (v.hypothesis && !v.conclusion));
      }
    }
  }
}

TEST_CASE("counterexamples replay") {
  for (auto id : {T::T_PI_ECSS, T::T_PU_ECSS, T::T_RU_ECSS, T::T_RI_ECSS}) {
    const auto cc = BracketInterpretation::ClosedClosed;
    const auto r = run_campaign(id, ExhaustiveMode{{3, 1, 1, 0}}, cc);
    REQUIRE(r.counterexample_count > 0);
    CHECK(r.counterexamples.size() == std::min<std::uint64_t>(r.counterexample_count, kCounterexampleCap));
    for (const auto& c : r.counterexamples) {
      const auto v = check_theorem(id, c.f, *c.g, cc);
      CHECK(v.hypothesis);
      CHECK_FALSE(v.conclusion);
      CHECK(v.witness == c.witness);
      // the embedded documents reload to the same instance
      CHECK(load_cubic_soft_set(serialize(c.f)) == c.f);
    }
  }
}

TEST_CASE("k=3 closed-closed counterexample counts") {
  const auto cc = BracketInterpretation::ClosedClosed;
  CHECK(run_campaign(T::T_PI_ECSS, ExhaustiveMode{{3, 1, 1, 0}}, cc).counterexample_count == 16);
  CHECK(run_campaign(T::T_PU_ECSS, ExhaustiveMode{{3, 1, 1, 0}}, cc).counterexample_count == 16);
  CHECK(run_campaign(T::T_RU_ECSS, ExhaustiveMode{{3, 1, 1, 0}}, cc).counterexample_count == 14);
  CHECK(run_campaign(T::T_RI_ECSS, ExhaustiveMode{{3, 1, 1, 0}}, cc).counterexample_count == 14);
}

TEST_CASE("reports do not depend on thread count") {
  const auto cc = BracketInterpretation::ClosedClosed;
  const auto a = serialize_report(run_campaign(T::T_PI_ECSS, ExhaustiveMode{{2, 2, 1, 0}}, cc, 1));
  const auto b = serialize_report(run_campaign(T::T_PI_ECSS, ExhaustiveMode{{2, 2, 1, 0}}, cc, 7));
  CHECK(a == b);
  RandomMode m;
  m.samples = 5000;
  m.seed = 99;
  m.universe_size = 2;
  const auto ra = serialize_report(run_campaign(T::T_RU_ECSS, m, cc, 1));
  const auto rb = serialize_report(run_campaign(T::T_RU_ECSS, m, cc, 5));
  CHECK(ra == rb);
  m.seed = 100;
  CHECK(serialize_report(run_campaign(T::T_RU_ECSS, m, cc, 1)) != ra);
}

TEST_CASE("random mode") {
  RandomMode m;
  m.samples = 3000;
  m.seed = 7;
  const auto plain = run_campaign(T::T_RU_ICSS, m, BracketInterpretation::AsWritten);
  CHECK(plain.instances_tested == 3000);
  CHECK(plain.hypothesis_holds < 3000);
  CHECK(plain.counterexample_count == 0);
  m.constrained = true;
  const auto constrained = run_campaign(T::T_RU_ICSS, m, BracketInterpretation::AsWritten);
  CHECK(constrained.instances_tested == 3000);
  CHECK(constrained.cells_gave_up == 0);
  CHECK(constrained.hypothesis_holds == 3000);
  CHECK(constrained.cell_rejections > 0);
  CHECK(constrained.cell_draws == 3000 + constrained.cell_rejections);
  const auto j = report_to_json(constrained);
  CHECK(j["rejection"]["cell_draws"] == constrained.cell_draws);
  CHECK(j["mode"]["seed"] == 7);
}

TEST_CASE("random grades stay on the grid and inside the unit interval") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto g = random_grade(rng);
    CHECK(g.ivf.lo() <= g.ivf.hi());
    CHECK(100 % g.fuzzy.denominator() == 0);
  }
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.below(1000) == b.below(1000));
}

TEST_CASE("campaign size cap") {
  CHECK_THROWS_AS(run_campaign(T::T_PU_ICSS, ExhaustiveMode{{2, 3, 2, 0}}, BracketInterpretation::AsWritten),
                  Error);
  try {
    run_campaign(T::T_PU_ICSS, ExhaustiveMode{{2, 3, 2, 0}}, BracketInterpretation::AsWritten);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CampaignTooLarge);
  }
  setenv("CSS_MAX_CAMPAIGN", "100", 1);
  CHECK(campaign_cap() == 100);
  CHECK_THROWS_AS(run_campaign(T::T_PU_ICSS, ExhaustiveMode{{2, 1, 1, 0}}, BracketInterpretation::AsWritten),
                  Error);
  CHECK_NOTHROW(run_campaign(T::T_COMP_ICSS, ExhaustiveMode{{2, 1, 1, 0}}, BracketInterpretation::AsWritten));
  unsetenv("CSS_MAX_CAMPAIGN");
  CHECK(campaign_cap() == kDefaultCampaignCap);
}

TEST_CASE("star theorems refuse exclusive parameters") {
  try {
    run_campaign(T::T_STAR_PU_ICSS, ExhaustiveMode{{1, 1, 1, 1}}, BracketInterpretation::AsWritten);
    FAIL("expected ParameterSetMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParameterSetMismatch);
  }
}

TEST_CASE("proposition and law suites pass on small runs") {
  const auto props = proposition_suite(1000, 3);
  CHECK(props.size() == 10);
  for (const auto& r : props) {
    CAPTURE(r.name);
    CHECK(r.passed == 1000);
    CHECK(r.failed == 0);
  }
  const auto laws = law_suite(1000, 3);
  CHECK(laws.size() == 12);
  for (const auto& r : laws) {
    CAPTURE(r.name);
    CHECK(r.passed == 1000);
    CHECK(r.failed == 0);
  }
}

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "css/classify.hpp"
#include "css/core.hpp"

namespace css {

/// Grade enumeration grid {0, 1/k, ..., 1}.
struct GridSpec {
  unsigned steps = 2;
  unsigned universe_size = 1;
  unsigned shared_params = 1;
  unsigned exclusive_params = 0;  // per operand, parameters the other lacks
};

struct TheoremVerdict {
  bool hypothesis = false;
  bool conclusion = false;
  std::optional<Cell> witness;  // set iff hypothesis && !conclusion
};

/// All <[lo,hi],d> on the grid, lo-major then hi then d.
std::vector<CubicGrade> enumerate_grades(unsigned k);

/// For unary theorems g is ignored.
TheoremVerdict check_theorem(TheoremId id, const CubicSoftSet& f, const CubicSoftSet& g,
                             BracketInterpretation interp = BracketInterpretation::AsWritten);

struct ExhaustiveMode {
  GridSpec grid;
};

struct RandomMode {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned universe_size = 1;
  unsigned shared_params = 1;
  unsigned exclusive_params = 0;
  bool constrained = false;  // redraw each cell until its hypothesis holds
};

struct Counterexample {
  CubicSoftSet f;
  std::optional<CubicSoftSet> g;
  Cell witness;
};

struct CampaignReport {
  TheoremId theorem{};
  BracketInterpretation interpretation{};
  std::optional<ExhaustiveMode> exhaustive;
  std::optional<RandomMode> random;
  std::uint64_t instances_tested = 0;
  std::uint64_t hypothesis_holds = 0;
  std::uint64_t conclusion_holds_given_hypothesis = 0;
  std::uint64_t vacuous_instances = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // first few, in instance order
  std::uint64_t cell_draws = 0;
  std::uint64_t cell_rejections = 0;
  std::uint64_t cells_gave_up = 0;
};

inline constexpr std::size_t kCounterexampleCap = 20;
inline constexpr unsigned kRandomGridSteps = 100;
inline constexpr std::uint64_t kDefaultCampaignCap = 100'000'000;

/// CSS_MAX_CAMPAIGN when set, else the default.
std::uint64_t campaign_cap();

/// Exhaustive: throws CampaignTooLarge past campaign_cap() instances.
CampaignReport run_campaign(TheoremId id, const ExhaustiveMode& mode, BracketInterpretation interp,
                            unsigned threads = 0);
CampaignReport run_campaign(TheoremId id, const RandomMode& mode, BracketInterpretation interp,
                            unsigned threads = 0);

nlohmann::json report_to_json(const CampaignReport& report);
std::string serialize_report(const CampaignReport& report);

/// Seeded engine with a portable bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Grid grade with lo/hi drawn uniformly and lo > hi rejected.
CubicGrade random_grade(Rng& rng, unsigned k = kRandomGridSteps);

/// Random set over `universe` whose parameters are a random subset of `pool`.
CubicSoftSet random_soft_set(Rng& rng, const std::vector<std::string>& universe,
                             const std::vector<ParameterId>& pool, unsigned k = kRandomGridSteps);

/// Random document for round-trip tests: odd labels, negated parameters,
/// mixed denominators.
CubicSoftSet random_document(Rng& rng);

struct SuiteResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

std::vector<SuiteResult> proposition_suite(std::uint64_t samples, std::uint64_t seed);
std::vector<SuiteResult> law_suite(std::uint64_t samples, std::uint64_t seed);

}  // namespace css

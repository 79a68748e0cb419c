#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxitive/extrat.hpp"
#include "maxitive/integral.hpp"
#include "maxitive/measures.hpp"
#include "maxitive/radon_nikodym.hpp"

namespace maxitive {

/// Configuration of a fuzzing run. Reports are a pure function of this
/// struct: no clock, thread or platform state ever enters a trial.
struct TrialConfig {
  std::uint64_t seed = 0;
  std::int64_t trials = 100;
  int max_atoms = 4;  // in [1, 6]
  std::vector<ExtRat> value_grid = default_value_grid();
  /// Probability of drawing inf when the grid contains it.
  ExtRat infinity_weight = ExtRat::fraction(1, 16);
  /// Replace grid draws by num/den with num in [0,100), den in [1,12];
  /// inf keeps its configured weight.
  bool arbitrary_rationals = false;

  static std::vector<ExtRat> default_value_grid();  // {0, 1/3, 1/2, 1, 2, 7, inf}
  void validate() const;
};

/// splitmix64 keyed by (seed, stream). Every trial draws exclusively
/// from its own stream, so serial and parallel runs agree.
class TrialRng {
public:
  TrialRng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0; rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t bound);
  /// True with exact probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

private:
  std::uint64_t state_;
};

/// The deterministic measure of trial `trial_index`: atom count uniform
/// in [1, max_atoms], atom values drawn from the grid.
MaxitiveMeasure random_maxitive(const TrialConfig& config, std::int64_t trial_index);

enum class RepStage {
  positivity,            // tau(B) > 0 <=> m(B) > 0
  absolute_continuity,   // tau << delta_m
  density_construction,  // c = d tau / d delta_m exists
  essential_supremum,    // tau(B) = m-sup over B of c
};
std::string_view to_string(RepStage stage);

/// Outcome of the essential-supremum representation pipeline, with every
/// intermediate object kept so failures are auditable without re-running.
struct RepVerdict {
  bool ok;
  std::optional<RepStage> failed_stage;
  std::string witness;
  AdditiveMeasure m;
  MaxitiveMeasure delta;
  std::optional<Density> c;
  explicit operator bool() const noexcept { return ok; }
};

/// Runs tau through the representation pipeline: m = disjoint variation,
/// positivity equivalence, delta_m, absolute continuity, density, and
/// finally tau(B) = ess sup of c over B for all 2^n sets. Reports the
/// first failing stage with its witness.
RepVerdict verify_representation(const MaxitiveMeasure& tau);

struct CheckVerdict {
  bool ok;
  std::string detail;
  explicit operator bool() const noexcept { return ok; }
};

/// For two-valued tau: tau = delta_m with m its disjoint variation.
/// Throws PreconditionNotTwoValued otherwise.
CheckVerdict verify_corollary(const MaxitiveMeasure& tau);

/// Both directions of the density equivalence for the pair (tau, nu),
/// plus almost-everywhere uniqueness under a null-atom perturbation.
/// Requires nu atom-finite (NotSigmaFinite).
CheckVerdict verify_sugeno_murofushi(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu);

/// The raw inputs of one trial. nu is drawn from the finite grid values
/// only, so the sigma-finite precondition holds by construction.
struct TrialCase {
  std::vector<std::string> labels;
  std::vector<ExtRat> tau;
  std::vector<ExtRat> nu;
  std::vector<ExtRat> c;

  Space space() const;
  MaxitiveMeasure tau_measure() const;
  MaxitiveMeasure nu_measure() const;
  Density density_map() const;
};

TrialCase make_trial_case(const TrialConfig& config, std::int64_t trial_index);

enum class TrialProperty {
  representation,
  corollary,
  sugeno_murofushi,
  variation_oracle_agreement,
  shilkret_oracle_agreement,
};
std::string_view to_string(TrialProperty property);

/// Evaluates one property on one case. Properties whose precondition the
/// case misses hold vacuously.
bool property_holds(TrialProperty property, const TrialCase& tc);

/// Witness text for a failing (property, case); empty when it holds.
std::string describe_property_failure(TrialProperty property, const TrialCase& tc);

/// Shrinks a failing case: first deletes atoms, then zeroes values, in
/// that order, keeping a step only if the property still fails after it.
TrialCase shrink_case(TrialCase failing, const std::function<bool(const TrialCase&)>& holds);

struct FailureRecord {
  std::int64_t trial_index = 0;
  std::string property;
  std::string inputs;  // single-line document serialization of the shrunk case
  std::string witness;
  friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct TrialReport {
  std::int64_t trials_run = 0;
  std::int64_t failures = 0;
  std::int64_t corollary_checked = 0;
  std::optional<FailureRecord> first_failure;

  std::string to_text() const;
  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// Runs every property on every generated trial and aggregates. The
/// report is deterministic: same config, same bytes.
TrialReport run_trials(const TrialConfig& config);

}  // namespace maxitive

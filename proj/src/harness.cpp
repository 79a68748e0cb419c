#include "maxitive/harness.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "maxitive/errors.hpp"
#include "maxitive/variation.hpp"

namespace maxitive {

namespace {

std::string braced(const Space& space, SubsetId set) {
  return "{" + space.set_string(set) + "}";
}

}  // namespace

std::vector<ExtRat> TrialConfig::default_value_grid() {
  return {ExtRat(0u),          ExtRat::fraction(1, 3), ExtRat::fraction(1, 2),
          ExtRat(1u),          ExtRat(2u),             ExtRat(7u),
          ExtRat::infinity()};
}

void TrialConfig::validate() const {
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
  if (max_atoms < 1 || max_atoms > 6) throw std::invalid_argument("max_atoms must be in [1, 6]");
  if (value_grid.empty()) throw std::invalid_argument("value_grid must be nonempty");
  bool has_finite = std::any_of(value_grid.begin(), value_grid.end(),
                                [](const ExtRat& v) { return v.is_finite(); });
  if (!has_finite) throw std::invalid_argument("value_grid needs a finite entry");
  if (infinity_weight.is_infinite() || ExtRat(1u) < infinity_weight) {
    throw std::invalid_argument("infinity_weight must be a rational in [0, 1]");
  }
  if (BigInt(std::numeric_limits<std::uint64_t>::max()) < infinity_weight.denominator()) {
    throw std::invalid_argument("infinity_weight denominator out of range");
  }
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xFF51AFD7ED558CCDULL;
  z ^= z >> 33;
  z *= 0xC4CEB9FE1A85EC53ULL;
  z ^= z >> 33;
  return z;
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed ^ mix64(stream ^ 0x5851F42D4C957F2DULL))) {}

std::uint64_t TrialRng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t TrialRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

bool TrialRng::chance(std::uint64_t num, std::uint64_t den) {
  if (num == 0) return false;
  if (num >= den) return true;
  return below(den) < num;
}

namespace {

struct GridView {
  std::vector<ExtRat> finite_entries;
  bool has_infinity = false;
  std::uint64_t weight_num = 0;
  std::uint64_t weight_den = 1;

  explicit GridView(const TrialConfig& config) {
    for (const ExtRat& v : config.value_grid) {
      if (v.is_infinite()) {
        has_infinity = true;
      } else {
        finite_entries.push_back(v);
      }
    }
    if (config.infinity_weight.is_positive()) {
      weight_num = config.infinity_weight.numerator().convert_to<std::uint64_t>();
      weight_den = config.infinity_weight.denominator().convert_to<std::uint64_t>();
    }
  }

  ExtRat draw(TrialRng& rng, const TrialConfig& config, bool allow_infinite) const {
    if (allow_infinite && has_infinity && rng.chance(weight_num, weight_den)) {
      return ExtRat::infinity();
    }
    if (config.arbitrary_rationals) {
      return ExtRat::fraction(BigInt(rng.below(100)), BigInt(1 + rng.below(12)));
    }
    return finite_entries[rng.below(finite_entries.size())];
  }
};

}  // namespace

Space TrialCase::space() const { return Space(labels); }

MaxitiveMeasure TrialCase::tau_measure() const { return MaxitiveMeasure(space(), tau); }

MaxitiveMeasure TrialCase::nu_measure() const { return MaxitiveMeasure(space(), nu); }

Density TrialCase::density_map() const { return Density(space(), c); }

TrialCase make_trial_case(const TrialConfig& config, std::int64_t trial_index) {
  config.validate();
  TrialRng rng(config.seed, static_cast<std::uint64_t>(trial_index));
  GridView grid(config);

  int atoms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.max_atoms)));
  TrialCase tc;
  tc.labels.reserve(static_cast<std::size_t>(atoms));
  for (int i = 0; i < atoms; ++i) {
    tc.labels.emplace_back(1, static_cast<char>('a' + i));
  }
  // Draw order is part of the format: tau, then nu, then c, each atom by
  // atom. nu stays finite so density checks never hit NotSigmaFinite.
  for (int i = 0; i < atoms; ++i) tc.tau.push_back(grid.draw(rng, config, true));
  for (int i = 0; i < atoms; ++i) tc.nu.push_back(grid.draw(rng, config, false));
  for (int i = 0; i < atoms; ++i) tc.c.push_back(grid.draw(rng, config, true));
  return tc;
}

MaxitiveMeasure random_maxitive(const TrialConfig& config, std::int64_t trial_index) {
  return make_trial_case(config, trial_index).tau_measure();
}

std::string_view to_string(RepStage stage) {
  switch (stage) {
    case RepStage::positivity: return "positivity";
    case RepStage::absolute_continuity: return "absolute-continuity";
    case RepStage::density_construction: return "density-construction";
    case RepStage::essential_supremum: return "essential-supremum";
  }
  return "?";
}

RepVerdict verify_representation(const MaxitiveMeasure& tau) {
  const Space& space = tau.space();
  AdditiveMeasure m = disjoint_variation(tau);
  MaxitiveMeasure delta = induced_delta(m);

  for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
    SubsetId b(mask);
    if (tau(b).is_positive() != m(b).is_positive()) {
      return {false, RepStage::positivity, braced(space, b), std::move(m), std::move(delta), std::nullopt};
    }
  }

  if (AcVerdict ac = absolutely_continuous(tau, delta); !ac.ok) {
    return {false,        RepStage::absolute_continuity, braced(space, ac.witness->set()),
            std::move(m), std::move(delta),              std::nullopt};
  }

  std::optional<Density> c;
  try {
    c = density(tau, delta);
  } catch (const Error& e) {
    return {false, RepStage::density_construction, e.what(), std::move(m), std::move(delta), std::nullopt};
  }

  for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
    SubsetId b(mask);
    if (essential_supremum(*c, m, b) != tau(b)) {
      return {false,        RepStage::essential_supremum, braced(space, b),
              std::move(m), std::move(delta),             std::move(c)};
    }
  }
  return {true, std::nullopt, "", std::move(m), std::move(delta), std::move(c)};
}

CheckVerdict verify_corollary(const MaxitiveMeasure& tau) {
  if (!is_two_valued(tau)) throw PreconditionNotTwoValued();
  const Space& space = tau.space();
  AdditiveMeasure m = disjoint_variation(tau);
  MaxitiveMeasure delta = induced_delta(m);
  for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
    SubsetId b(mask);
    if (tau(b) != delta(b)) {
      return {false, "set=" + braced(space, b) + " tau=" + tau(b).str() + " delta=" + delta(b).str()};
    }
  }
  return {true, "tau coincides with the measure induced by its disjoint variation"};
}

CheckVerdict verify_sugeno_murofushi(const MaxitiveMeasure& tau, const MaxitiveMeasure& nu) {
  const Space& space = tau.space();
  if (space != nu.space()) throw SpaceMismatch();
  for (int a = 0; a < space.atom_count(); ++a) {
    if (nu.atom_value(a).is_infinite()) throw NotSigmaFinite(space.label(a));
  }

  AcVerdict ac = absolutely_continuous(tau, nu);
  if (!ac.ok) {
    // Failing direction of the equivalence: construction must refuse,
    // and with the same witness the direct check found.
    try {
      density(tau, nu);
    } catch (const NotAbsolutelyContinuous& e) {
      if (e.witness().set() == ac.witness->set()) {
        return {true, "no density: tau not absolutely continuous, witness " + braced(space, ac.witness->set())};
      }
      return {false, "witness disagreement: check found " + braced(space, ac.witness->set()) +
                         ", construction reported " + braced(space, e.witness().set())};
    }
    return {false, "density construction succeeded despite tau not being "
                   "absolutely continuous, witness " +
                       braced(space, ac.witness->set())};
  }

  Density c = density(tau, nu);
  if (DensityVerdict vd = verify_density(tau, nu, c); !vd.ok) {
    return {false, "constructed density misses tau at set " + braced(space, *vd.witness)};
  }

  // Uniqueness holds nu-almost everywhere: changing c on nu-null atoms
  // must leave a valid density that the a.e. comparison still accepts.
  Density perturbed = c;
  for (int a = 0; a < space.atom_count(); ++a) {
    if (nu.atom_value(a).is_zero()) perturbed = perturbed.with_value(a, ExtRat(99u));
  }
  if (DensityVerdict vd = verify_density(tau, nu, perturbed); !vd.ok) {
    return {false, "null-atom perturbation broke the density at set " + braced(space, *vd.witness)};
  }
  if (!densities_agree_ae(c, perturbed, nu)) {
    return {false, "densities differ on a nu-positive atom"};
  }
  return {true, "density exists, represents tau, and is unique nu-a.e."};
}

std::string_view to_string(TrialProperty property) {
  switch (property) {
    case TrialProperty::representation: return "representation";
    case TrialProperty::corollary: return "corollary";
    case TrialProperty::sugeno_murofushi: return "sugeno-murofushi";
    case TrialProperty::variation_oracle_agreement: return "variation-oracle-agreement";
    case TrialProperty::shilkret_oracle_agreement: return "shilkret-oracle-agreement";
  }
  return "?";
}

namespace {

// Exhaustive for small spaces; empty set, singletons and the full set
// once partition counts start to bite.
std::vector<SubsetId> agreement_sets(const Space& space) {
  std::vector<SubsetId> sets;
  if (space.atom_count() <= 4) {
    for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) sets.emplace_back(mask);
    return sets;
  }
  sets.push_back(space.empty_set());
  for (int a = 0; a < space.atom_count(); ++a) sets.push_back(space.singleton(a));
  sets.push_back(space.full_set());
  return sets;
}

std::string variation_failure(const MaxitiveMeasure& tau) {
  const Space& space = tau.space();
  AdditiveMeasure m = disjoint_variation(tau);
  for (SubsetId b : agreement_sets(space)) {
    ExtRat closed = m(b);
    ExtRat oracle = variation_oracle(tau, b);
    if (closed != oracle) {
      return "set=" + braced(space, b) + " variation=" + closed.str() + " oracle=" + oracle.str();
    }
  }
  return "";
}

std::string shilkret_failure(const Density& c, const MaxitiveMeasure& nu, const std::string& name) {
  const Space& space = nu.space();
  for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
    SubsetId b(mask);
    ExtRat closed = shilkret_integral(c, nu, b);
    ExtRat oracle = shilkret_oracle(c, nu, b);
    if (closed != oracle) {
      return "measure=" + name + " set=" + braced(space, b) + " integral=" + closed.str() +
             " oracle=" + oracle.str();
    }
  }
  return "";
}

}  // namespace

bool property_holds(TrialProperty property, const TrialCase& tc) {
  switch (property) {
    case TrialProperty::representation:
      return verify_representation(tc.tau_measure()).ok;
    case TrialProperty::corollary: {
      MaxitiveMeasure tau = tc.tau_measure();
      if (!is_two_valued(tau)) return true;
      return verify_corollary(tau).ok;
    }
    case TrialProperty::sugeno_murofushi:
      return verify_sugeno_murofushi(tc.tau_measure(), tc.nu_measure()).ok;
    case TrialProperty::variation_oracle_agreement:
      return variation_failure(tc.tau_measure()).empty();
    case TrialProperty::shilkret_oracle_agreement: {
      Density c = tc.density_map();
      return shilkret_failure(c, tc.tau_measure(), "tau").empty() &&
             shilkret_failure(c, tc.nu_measure(), "nu").empty();
    }
  }
  return true;
}

std::string describe_property_failure(TrialProperty property, const TrialCase& tc) {
  switch (property) {
    case TrialProperty::representation: {
      RepVerdict v = verify_representation(tc.tau_measure());
      if (v.ok) return "";
      return "stage=" + std::string(to_string(*v.failed_stage)) + " witness=" + v.witness;
    }
    case TrialProperty::corollary: {
      MaxitiveMeasure tau = tc.tau_measure();
      if (!is_two_valued(tau)) return "";
      CheckVerdict v = verify_corollary(tau);
      return v.ok ? "" : v.detail;
    }
    case TrialProperty::sugeno_murofushi: {
      CheckVerdict v = verify_sugeno_murofushi(tc.tau_measure(), tc.nu_measure());
      return v.ok ? "" : v.detail;
    }
    case TrialProperty::variation_oracle_agreement:
      return variation_failure(tc.tau_measure());
    case TrialProperty::shilkret_oracle_agreement: {
      Density c = tc.density_map();
      std::string against_tau = shilkret_failure(c, tc.tau_measure(), "tau");
      if (!against_tau.empty()) return against_tau;
      return shilkret_failure(c, tc.nu_measure(), "nu");
    }
  }
  return "";
}

TrialCase shrink_case(TrialCase failing, const std::function<bool(const TrialCase&)>& holds) {
  // Atom deletion first; restart the scan after every success so earlier
  // atoms get another chance once later ones are gone.
  bool deleted = true;
  while (deleted && failing.labels.size() > 1) {
    deleted = false;
    for (std::size_t i = 0; i < failing.labels.size(); ++i) {
      TrialCase candidate = failing;
      candidate.labels.erase(candidate.labels.begin() + static_cast<std::ptrdiff_t>(i));
      candidate.tau.erase(candidate.tau.begin() + static_cast<std::ptrdiff_t>(i));
      candidate.nu.erase(candidate.nu.begin() + static_cast<std::ptrdiff_t>(i));
      candidate.c.erase(candidate.c.begin() + static_cast<std::ptrdiff_t>(i));
      if (!holds(candidate)) {
        failing = std::move(candidate);
        deleted = true;
        break;
      }
    }
  }
  // Then zero values, tau before nu before c, each atom in order.
  for (std::vector<ExtRat> TrialCase::* field : {&TrialCase::tau, &TrialCase::nu, &TrialCase::c}) {
    for (std::size_t i = 0; i < (failing.*field).size(); ++i) {
      if ((failing.*field)[i].is_zero()) continue;
      TrialCase candidate = failing;
      (candidate.*field)[i] = ExtRat(0u);
      if (!holds(candidate)) failing = std::move(candidate);
    }
  }
  return failing;
}

namespace {

void append_values(std::string& out, std::string_view name, const TrialCase& tc,
                   const std::vector<ExtRat>& values) {
  out += name;
  out += "={";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += tc.labels[i];
    out += ":";
    out += values[i].str();
  }
  out += "}";
}

std::string serialize_case(const TrialCase& tc) {
  std::string out;
  append_values(out, "tau", tc, tc.tau);
  out += " ";
  append_values(out, "nu", tc, tc.nu);
  out += " ";
  append_values(out, "c", tc, tc.c);
  return out;
}

}  // namespace

std::string TrialReport::to_text() const {
  std::string out;
  out += "trials-run: " + std::to_string(trials_run) + "\n";
  out += "corollary-checked: " + std::to_string(corollary_checked) + "\n";
  out += "failures: " + std::to_string(failures) + "\n";
  if (first_failure) {
    out += "first-failure:\n";
    out += "  trial: " + std::to_string(first_failure->trial_index) + "\n";
    out += "  property: " + first_failure->property + "\n";
    out += "  inputs: " + first_failure->inputs + "\n";
    out += "  witness: " + first_failure->witness + "\n";
  }
  return out;
}

TrialReport run_trials(const TrialConfig& config) {
  config.validate();
  constexpr TrialProperty kProperties[] = {
      TrialProperty::representation,
      TrialProperty::corollary,
      TrialProperty::sugeno_murofushi,
      TrialProperty::variation_oracle_agreement,
      TrialProperty::shilkret_oracle_agreement,
  };

  TrialReport report;
  for (std::int64_t index = 0; index < config.trials; ++index) {
    TrialCase tc = make_trial_case(config, index);
    if (is_two_valued(tc.tau_measure())) ++report.corollary_checked;
    for (TrialProperty property : kProperties) {
      if (property_holds(property, tc)) continue;
      ++report.failures;
      if (!report.first_failure) {
        TrialCase shrunk = shrink_case(
            tc, [property](const TrialCase& candidate) { return property_holds(property, candidate); });
        report.first_failure = FailureRecord{
            index,
            std::string(to_string(property)),
            serialize_case(shrunk),
            describe_property_failure(property, shrunk),
        };
      }
      break;
    }
    ++report.trials_run;
  }
  return report;
}

}  // namespace maxitive

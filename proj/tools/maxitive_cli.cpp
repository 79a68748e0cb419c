#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include "CLI11.hpp"
#include "maxitive/document.hpp"
#include "maxitive/errors.hpp"
#include "maxitive/harness.hpp"
#include "maxitive/integral.hpp"
#include "maxitive/measures.hpp"
#include "maxitive/radon_nikodym.hpp"
#include "maxitive/variation.hpp"

namespace {

using namespace maxitive;

/// A property the input falsifies: reported on stdout, exit code 1.
struct Falsified {
  std::string message;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string braced(const Space& space, SubsetId set) {
  return "{" + space.set_string(set) + "}";
}

std::string pair_witness_string(const Space& space, const PairWitness& w) {
  return braced(space, w.first) + " " + braced(space, w.second);
}

MaxitiveMeasure load_maxitive(const std::string& path) {
  ParsedMeasure parsed = parse_measure(slurp(path));
  if (auto* tau = std::get_if<MaxitiveMeasure>(&parsed)) return std::move(*tau);
  if (auto* table = std::get_if<SetFunction>(&parsed)) {
    TableVerdict verdict = is_maxitive(*table);
    if (!verdict.ok) {
      throw Falsified{path + ": table is not maxitive, witness " +
                      pair_witness_string(table->space(), *verdict.witness)};
    }
    return MaxitiveMeasure::from_table(*table);
  }
  throw Error(path + ": expected a maxitive measure, found an additive document");
}

AdditiveMeasure load_additive(const std::string& path) {
  ParsedMeasure parsed = parse_measure(slurp(path));
  if (auto* m = std::get_if<AdditiveMeasure>(&parsed)) return std::move(*m);
  if (auto* table = std::get_if<SetFunction>(&parsed)) {
    TableVerdict verdict = is_additive(*table);
    if (!verdict.ok) {
      throw Falsified{path + ": table is not additive, witness " +
                      pair_witness_string(table->space(), *verdict.witness)};
    }
    return AdditiveMeasure::from_table(*table);
  }
  throw Error(path + ": expected an additive measure, found a maxitive document");
}

std::string atom_map_string(const Space& space, std::span<const ExtRat> values) {
  std::string out = "{";
  for (int a = 0; a < space.atom_count(); ++a) {
    if (a > 0) out += ",";
    out += space.label(a) + ":" + values[static_cast<std::size_t>(a)].str();
  }
  return out + "}";
}

int run_check(const std::string& file) {
  ParsedMeasure parsed = parse_measure(slurp(file));
  return std::visit(
      overloaded{
          [](const MaxitiveMeasure&) {
            std::cout << "kind: maxitive\nverdict: ok\n";
            return 0;
          },
          [](const AdditiveMeasure&) {
            std::cout << "kind: additive\nverdict: ok\n";
            return 0;
          },
          [](const SetFunction& table) {
            TableVerdict mv = is_maxitive(table);
            TableVerdict av = is_additive(table);
            std::cout << "kind: table\n";
            std::cout << "maxitive: " << (mv.ok ? "yes" : "no, witness " + pair_witness_string(table.space(), *mv.witness))
                      << "\n";
            std::cout << "additive: " << (av.ok ? "yes" : "no, witness " + pair_witness_string(table.space(), *av.witness))
                      << "\n";
            return (mv.ok || av.ok) ? 0 : 1;
          },
      },
      parsed);
}

int run_integrate(const std::string& nu_file, const std::string& density_file,
                  const std::string& set_text, bool use_oracle) {
  MaxitiveMeasure nu = load_maxitive(nu_file);
  Density c = parse_density(slurp(density_file));
  SubsetId b = parse_set_string(nu.space(), set_text);
  ExtRat value = use_oracle ? shilkret_oracle(c, nu, b) : shilkret_integral(c, nu, b);
  std::cout << value.str() << "\n";
  return 0;
}

int run_variation(const std::string& tau_file, bool use_oracle, const std::optional<std::string>& set_text) {
  MaxitiveMeasure tau = load_maxitive(tau_file);
  if (set_text) {
    SubsetId b = parse_set_string(tau.space(), *set_text);
    ExtRat value = use_oracle ? variation_oracle(tau, b) : disjoint_variation(tau)(b);
    std::cout << value.str() << "\n";
    return 0;
  }
  if (use_oracle) {
    const Space& space = tau.space();
    std::vector<ExtRat> table;
    table.reserve(space.subset_count());
    for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
      table.push_back(variation_oracle(tau, SubsetId(mask)));
    }
    std::cout << to_document(SetFunction(space, std::move(table)));
    return 0;
  }
  std::cout << to_document(disjoint_variation(tau));
  return 0;
}

int run_induce(const std::string& m_file) {
  AdditiveMeasure m = load_additive(m_file);
  std::cout << to_document(induced_delta(m));
  return 0;
}

int run_density(const std::string& tau_file, const std::string& nu_file) {
  MaxitiveMeasure tau = load_maxitive(tau_file);
  MaxitiveMeasure nu = load_maxitive(nu_file);
  try {
    Density c = density(tau, nu);
    std::cout << to_document(c);
    return 0;
  } catch (const NotAbsolutelyContinuous& e) {
    std::cout << "not absolutely continuous, witness " << braced(tau.space(), e.witness().set()) << "\n";
    return 1;
  }
}

int run_verify(const std::string& tau_file) {
  MaxitiveMeasure tau = load_maxitive(tau_file);
  RepVerdict verdict = verify_representation(tau);
  const Space& space = tau.space();
  std::cout << "verdict: " << (verdict.ok ? "ok" : "failed") << "\n";
  if (!verdict.ok) {
    std::cout << "stage: " << to_string(*verdict.failed_stage) << "\n";
    std::cout << "witness: " << verdict.witness << "\n";
  }
  std::cout << "m: " << atom_map_string(space, verdict.m.atom_values()) << "\n";
  std::cout << "delta_m: " << atom_map_string(space, verdict.delta.atom_values()) << "\n";
  if (verdict.c) {
    std::cout << "c: " << atom_map_string(space, verdict.c->values()) << "\n";
  } else {
    std::cout << "c: (none)\n";
  }
  return verdict.ok ? 0 : 1;
}

int run_fuzz(std::uint64_t seed, std::int64_t trials, int max_atoms, bool arbitrary) {
  TrialConfig config;
  config.seed = seed;
  config.trials = trials;
  config.max_atoms = max_atoms;
  config.arbitrary_rationals = arbitrary;
  TrialReport report = run_trials(config);
  std::cout << report.to_text();
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with maxitive measures on finite spaces"};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "validate a measure document");
  check->add_option("file", check_file, "measure document")->required();

  std::string int_nu, int_density, int_set;
  bool int_oracle = false;
  auto* integrate = app.add_subcommand("integrate", "Shilkret integral of a density over a set");
  integrate->add_option("--nu", int_nu, "measure document")->required();
  integrate->add_option("--density", int_density, "density document")->required();
  integrate->add_option("--set", int_set, "comma-joined labels, \"\" for the empty set")->required();
  integrate->add_flag("--oracle", int_oracle, "evaluate by the brute-force definition");

  std::string var_tau;
  bool var_oracle = false;
  std::optional<std::string> var_set;
  auto* variation = app.add_subcommand("variation", "disjoint variation of a maxitive measure");
  variation->add_option("--tau", var_tau, "maxitive measure document")->required();
  variation->add_flag("--oracle", var_oracle, "evaluate by partition enumeration");
  variation->add_option("--set", var_set, "report the value on one set only");

  std::string induce_m;
  auto* induce = app.add_subcommand("induce", "two-valued measure induced by an additive measure");
  induce->add_option("--m", induce_m, "additive measure document")->required();

  std::string den_tau, den_nu;
  auto* density_cmd = app.add_subcommand("density", "Radon-Nikodym density of tau with respect to nu");
  density_cmd->add_option("--tau", den_tau, "maxitive measure document")->required();
  density_cmd->add_option("--nu", den_nu, "maxitive measure document")->required();

  std::string ver_tau;
  auto* verify = app.add_subcommand("verify", "essential-supremum representation pipeline");
  verify->add_option("--tau", ver_tau, "maxitive measure document")->required();

  std::uint64_t fuzz_seed = 0;
  std::int64_t fuzz_trials = 0;
  int fuzz_max_atoms = 4;
  bool fuzz_arbitrary = false;
  auto* fuzz = app.add_subcommand("fuzz", "seeded randomized verification");
  fuzz->add_option("--seed", fuzz_seed, "64-bit seed")->required();
  fuzz->add_option("--trials", fuzz_trials, "number of trials")->required();
  fuzz->add_option("--max-atoms", fuzz_max_atoms, "atoms per trial drawn from [1, K]");
  fuzz->add_flag("--arbitrary-rationals", fuzz_arbitrary, "draw arbitrary small rationals instead of the grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_check(check_file);
    if (*integrate) return run_integrate(int_nu, int_density, int_set, int_oracle);
    if (*variation) return run_variation(var_tau, var_oracle, var_set);
    if (*induce) return run_induce(induce_m);
    if (*density_cmd) return run_density(den_tau, den_nu);
    if (*verify) return run_verify(ver_tau);
    if (*fuzz) return run_fuzz(fuzz_seed, fuzz_trials, fuzz_max_atoms, fuzz_arbitrary);
  } catch (const Falsified& f) {
    std::cout << f.message << "\n";
    return 1;
  } catch (const maxitive::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxitive/document.hpp"
#include "maxitive/errors.hpp"
#include "maxitive/harness.hpp"
#include "maxitive/integral.hpp"
#include "maxitive/measures.hpp"
#include "maxitive/radon_nikodym.hpp"
#include "maxitive/variation.hpp"

namespace py = pybind11;
using namespace maxitive;

namespace {

ExtRat value_in(const std::string& token) {
  std::optional<ExtRat> value = ExtRat::parse(token);
  if (!value) throw py::value_error("bad value token: " + token);
  return *value;
}

std::map<std::string, ExtRat> map_in(const std::map<std::string, std::string>& tokens) {
  std::map<std::string, ExtRat> out;
  for (const auto& [label, token] : tokens) out.emplace(label, value_in(token));
  return out;
}

py::dict map_out(const Space& space, std::span<const ExtRat> values) {
  py::dict out;
  for (int a = 0; a < space.atom_count(); ++a) {
    out[py::str(space.label(a))] = values[static_cast<std::size_t>(a)].str();
  }
  return out;
}

SubsetId set_in(const Space& space, const std::vector<std::string>& labels) {
  return space.subset_of_labels(labels);
}

std::vector<std::string> set_out(const Space& space, SubsetId set) { return space.labels_of(set); }

SetFunction table_in(const std::vector<std::string>& labels,
                     const std::map<std::string, std::string>& table) {
  Space space{labels};
  std::vector<std::optional<ExtRat>> slots(space.subset_count());
  for (const auto& [key, token] : table) {
    SubsetId set = parse_set_string(space, key);
    auto& slot = slots[set.mask()];
    if (slot) throw py::value_error("duplicate set: " + key);
    slot = value_in(token);
  }
  std::vector<ExtRat> values;
  values.reserve(slots.size());
  for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
    if (!slots[mask]) throw IncompleteTable(space.set_string(SubsetId(mask)));
    values.push_back(*slots[mask]);
  }
  return SetFunction(std::move(space), std::move(values));
}

py::object table_verdict_out(const Space& space, const TableVerdict& verdict) {
  if (verdict.ok) return py::make_tuple(true, py::none());
  return py::make_tuple(false, py::make_tuple(set_out(space, verdict.witness->first),
                                              set_out(space, verdict.witness->second)));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "exact maxitive measures, Shilkret integrals and Radon-Nikodym densities on finite spaces";

  py::register_exception<Error>(mod, "MaxitiveError");
  py::register_exception<NotAbsolutelyContinuous>(mod, "NotAbsolutelyContinuousError");

  py::class_<Space>(mod, "Space")
      .def(py::init([](const std::vector<std::string>& labels) { return Space(labels); }),
           py::arg("atoms"))
      .def_property_readonly("labels",
                             [](const Space& s) {
                               return std::vector<std::string>(s.labels().begin(), s.labels().end());
                             })
      .def("__eq__", [](const Space& a, const Space& b) { return a == b; })
      .def("__repr__", [](const Space& s) {
        std::string out = "Space([";
        for (int a = 0; a < s.atom_count(); ++a) {
          if (a > 0) out += ", ";
          out += "'" + s.label(a) + "'";
        }
        return out + "])";
      });

  py::class_<MaxitiveMeasure>(mod, "MaxitiveMeasure")
      .def(py::init([](const std::vector<std::string>& labels,
                       const std::map<std::string, std::string>& values) {
             return MaxitiveMeasure::from_atoms(Space(labels), map_in(values));
           }),
           py::arg("atoms"), py::arg("atom_values"))
      .def("__call__",
           [](const MaxitiveMeasure& tau, const std::vector<std::string>& set) {
             return tau(set_in(tau.space(), set)).str();
           },
           py::arg("set"))
      .def_property_readonly("space", &MaxitiveMeasure::space)
      .def_property_readonly("atom_values",
                             [](const MaxitiveMeasure& tau) { return map_out(tau.space(), tau.atom_values()); })
      .def("__eq__", [](const MaxitiveMeasure& a, const MaxitiveMeasure& b) { return a == b; })
      .def("__repr__", [](const MaxitiveMeasure& tau) {
        return "MaxitiveMeasure(" + py::repr(map_out(tau.space(), tau.atom_values())).cast<std::string>() + ")";
      });

  py::class_<AdditiveMeasure>(mod, "AdditiveMeasure")
      .def(py::init([](const std::vector<std::string>& labels,
                       const std::map<std::string, std::string>& values) {
             return AdditiveMeasure::from_atoms(Space(labels), map_in(values));
           }),
           py::arg("atoms"), py::arg("atom_values"))
      .def("__call__",
           [](const AdditiveMeasure& m, const std::vector<std::string>& set) {
             return m(set_in(m.space(), set)).str();
           },
           py::arg("set"))
      .def_property_readonly("space", &AdditiveMeasure::space)
      .def_property_readonly("atom_values",
                             [](const AdditiveMeasure& m) { return map_out(m.space(), m.atom_values()); })
      .def("__eq__", [](const AdditiveMeasure& a, const AdditiveMeasure& b) { return a == b; })
      .def("__repr__", [](const AdditiveMeasure& m) {
        return "AdditiveMeasure(" + py::repr(map_out(m.space(), m.atom_values())).cast<std::string>() + ")";
      });

  py::class_<Density>(mod, "Density")
      .def(py::init([](const std::vector<std::string>& labels,
                       const std::map<std::string, std::string>& values) {
             return Density::from_atoms(Space(labels), map_in(values));
           }),
           py::arg("atoms"), py::arg("values"))
      .def_property_readonly("space", &Density::space)
      .def_property_readonly("values", [](const Density& c) { return map_out(c.space(), c.values()); })
      .def("__eq__", [](const Density& a, const Density& b) { return a == b; })
      .def("__repr__", [](const Density& c) {
        return "Density(" + py::repr(map_out(c.space(), c.values())).cast<std::string>() + ")";
      });

  py::class_<SetFunction>(mod, "SetFunction")
      .def(py::init(&table_in), py::arg("atoms"), py::arg("table"))
      .def("__call__",
           [](const SetFunction& f, const std::vector<std::string>& set) {
             return f(set_in(f.space(), set)).str();
           },
           py::arg("set"))
      .def_property_readonly("space", &SetFunction::space)
      .def_property_readonly("table", [](const SetFunction& f) {
        py::dict out;
        const Space& space = f.space();
        for (std::uint32_t mask = 0; mask < space.subset_count(); ++mask) {
          out[py::str(space.set_string(SubsetId(mask)))] = f(SubsetId(mask)).str();
        }
        return out;
      });

  mod.def("is_maxitive",
          [](const SetFunction& f) { return table_verdict_out(f.space(), is_maxitive(f)); },
          "ok flag plus the least violating pair of sets, when any");
  mod.def("is_additive",
          [](const SetFunction& f) { return table_verdict_out(f.space(), is_additive(f)); });
  mod.def("is_normed", &is_normed);
  mod.def("is_two_valued", &is_two_valued);
  mod.def("induced_delta", &induced_delta, py::arg("m"));
  mod.def("disjoint_variation", &disjoint_variation, py::arg("tau"));
  mod.def("variation_oracle",
          [](const MaxitiveMeasure& tau, const std::vector<std::string>& set) {
            return variation_oracle(tau, set_in(tau.space(), set)).str();
          },
          py::arg("tau"), py::arg("set"));
  mod.def("shilkret_integral",
          [](const Density& c, const MaxitiveMeasure& nu, const std::vector<std::string>& set) {
            return shilkret_integral(c, nu, set_in(nu.space(), set)).str();
          },
          py::arg("c"), py::arg("nu"), py::arg("set"));
  mod.def("shilkret_oracle",
          [](const Density& c, const MaxitiveMeasure& nu, const std::vector<std::string>& set) {
            return shilkret_oracle(c, nu, set_in(nu.space(), set)).str();
          },
          py::arg("c"), py::arg("nu"), py::arg("set"));
  mod.def("essential_supremum",
          [](const Density& c, const AdditiveMeasure& m, const std::vector<std::string>& set) {
            return essential_supremum(c, m, set_in(m.space(), set)).str();
          },
          py::arg("c"), py::arg("m"), py::arg("set"));
  mod.def("absolutely_continuous",
          [](const MaxitiveMeasure& tau, const MaxitiveMeasure& nu) -> py::object {
            AcVerdict verdict = absolutely_continuous(tau, nu);
            if (verdict.ok) return py::make_tuple(true, py::none());
            return py::make_tuple(false, set_out(tau.space(), verdict.witness->set()));
          },
          py::arg("tau"), py::arg("nu"));
  mod.def("density", &density, py::arg("tau"), py::arg("nu"),
          "Radon-Nikodym density; raises NotAbsolutelyContinuousError when none exists");
  mod.def("verify_density",
          [](const MaxitiveMeasure& tau, const MaxitiveMeasure& nu, const Density& c) -> py::object {
            DensityVerdict verdict = verify_density(tau, nu, c);
            if (verdict.ok) return py::make_tuple(true, py::none());
            return py::make_tuple(false, set_out(tau.space(), *verdict.witness));
          },
          py::arg("tau"), py::arg("nu"), py::arg("c"));
  mod.def("densities_agree_ae", &densities_agree_ae, py::arg("c1"), py::arg("c2"), py::arg("nu"));
  mod.def("principal_witness",
          [](const MaxitiveMeasure& mu, const std::vector<std::string>& generator) {
            Ideal ideal(mu.space(), set_in(mu.space(), generator));
            return set_out(mu.space(), principal_witness(mu, ideal));
          },
          py::arg("mu"), py::arg("generator"));
  mod.def("principal_witness",
          [](const AdditiveMeasure& mu, const std::vector<std::string>& generator) {
            Ideal ideal(mu.space(), set_in(mu.space(), generator));
            return set_out(mu.space(), principal_witness(mu, ideal));
          },
          py::arg("mu"), py::arg("generator"));
  mod.def("max_disjoint_positive_family",
          [](const MaxitiveMeasure& mu) { return max_disjoint_positive_family(mu); });
  mod.def("max_disjoint_positive_family",
          [](const AdditiveMeasure& mu) { return max_disjoint_positive_family(mu); });

  mod.def("verify_representation",
          [](const MaxitiveMeasure& tau) {
            RepVerdict verdict = verify_representation(tau);
            py::dict out;
            out["ok"] = verdict.ok;
            out["stage"] = verdict.failed_stage ? py::cast(std::string(to_string(*verdict.failed_stage)))
                                                : py::object(py::none());
            out["witness"] = verdict.witness;
            out["m"] = map_out(tau.space(), verdict.m.atom_values());
            out["delta_m"] = map_out(tau.space(), verdict.delta.atom_values());
            out["c"] = verdict.c ? py::object(map_out(tau.space(), verdict.c->values()))
                                 : py::object(py::none());
            return out;
          },
          py::arg("tau"));
  mod.def("verify_corollary",
          [](const MaxitiveMeasure& tau) {
            CheckVerdict verdict = verify_corollary(tau);
            return py::make_tuple(verdict.ok, verdict.detail);
          },
          py::arg("tau"));
  mod.def("verify_sugeno_murofushi",
          [](const MaxitiveMeasure& tau, const MaxitiveMeasure& nu) {
            CheckVerdict verdict = verify_sugeno_murofushi(tau, nu);
            return py::make_tuple(verdict.ok, verdict.detail);
          },
          py::arg("tau"), py::arg("nu"));
  mod.def("run_trials",
          [](std::uint64_t seed, std::int64_t trials, int max_atoms, bool arbitrary_rationals) {
            TrialConfig config;
            config.seed = seed;
            config.trials = trials;
            config.max_atoms = max_atoms;
            config.arbitrary_rationals = arbitrary_rationals;
            TrialReport report = run_trials(config);
            py::dict out;
            out["trials_run"] = report.trials_run;
            out["failures"] = report.failures;
            out["corollary_checked"] = report.corollary_checked;
            out["text"] = report.to_text();
            return out;
          },
          py::arg("seed"), py::arg("trials"), py::arg("max_atoms") = 4,
          py::arg("arbitrary_rationals") = false);

  mod.def("parse_measure",
          [](const std::string& text) {
            return std::visit([](auto&& v) -> py::object { return py::cast(std::move(v)); },
                              parse_measure(text));
          },
          py::arg("text"));
  mod.def("parse_density", &parse_density, py::arg("text"));
  mod.def("to_document", py::overload_cast<const MaxitiveMeasure&>(&to_document));
  mod.def("to_document", py::overload_cast<const AdditiveMeasure&>(&to_document));
  mod.def("to_document", py::overload_cast<const SetFunction&>(&to_document));
  mod.def("to_document", py::overload_cast<const Density&>(&to_document));
}

// Copyright 2026 The pruw authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings for the pruw core. Field elements cross the boundary as
// plain integers and rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pruw/accounting.h"
#include "pruw/client.h"
#include "pruw/coded_storage.h"
#include "pruw/errors.h"
#include "pruw/finite_field.h"
#include "pruw/leakage.h"
#include "pruw/params.h"
#include "pruw/permutations.h"
#include "pruw/simulation.h"
#include "pruw/worked_examples.h"

namespace py = pybind11;

namespace pruw {
namespace {

using Index = std::pair<size_t, size_t>;  // (subpacket, segment)

std::vector<FieldElement> ToElements(const PrimeField& field,
                                     const std::vector<uint64_t>& values) {
  std::vector<FieldElement> out;
  out.reserve(values.size());
  for (uint64_t v : values) out.push_back(field.reduce(v));
  return out;
}

std::vector<uint64_t> ToValues(const std::vector<FieldElement>& elements) {
  std::vector<uint64_t> out;
  out.reserve(elements.size());
  for (FieldElement e : elements) out.push_back(e.value);
  return out;
}

py::object ToFraction(const Rational& r) {
  return py::module_::import("fractions")
      .attr("Fraction")(r.numerator(), r.denominator());
}

py::object ToFraction(const leakage::BigRational& r) {
  const auto num = py::int_(py::str(
      boost::multiprecision::numerator(r).str()));
  const auto den = py::int_(py::str(
      boost::multiprecision::denominator(r).str()));
  return py::module_::import("fractions").attr("Fraction")(num, den);
}

py::object FromJson(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json ToJson(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) {
    return nlohmann::json::parse(obj.cast<std::string>());
  }
  const auto text =
      py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return nlohmann::json::parse(text);
}

SystemParams BuildParams(const std::string& scheme, size_t n, size_t p,
                         size_t b, const py::object& r, const py::object& r_prime,
                         uint64_t q, std::vector<uint64_t> alphas) {
  return MakeParams(ParseScheme(scheme), n, p, b,
                    ParseRational(py::str(r).cast<std::string>()),
                    ParseRational(py::str(r_prime).cast<std::string>()), q,
                    std::move(alphas));
}

py::dict PmfToDict(const leakage::Pmf& pmf) {
  py::dict out;
  for (const auto& [counts, prob] : pmf) {
    out[py::tuple(py::cast(counts))] = ToFraction(prob);
  }
  return out;
}

void BindErrors(py::module_& m) {
  // Translators run newest first, so each type is registered after its base.
  const auto& base =
      py::register_exception<PruwError>(m, "PruwError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  const auto& dimension =
      py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<UnderdeterminedError>(m, "UnderdeterminedError",
                                               dimension.ptr());
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError",
                                              base.ptr());
  py::register_exception<DivisionByZeroError>(m, "DivisionByZeroError",
                                              base.ptr());
  py::register_exception<IndexError>(m, "IndexError", base.ptr());
  py::register_exception<ProtocolError>(m, "ProtocolError", base.ptr());
  py::register_exception<OracleViolation>(m, "OracleViolation", base.ptr());
}

void BindField(py::module_& m) {
  py::class_<PrimeField>(m, "PrimeField")
      .def(py::init<uint64_t>(), py::arg("q") = kMersenne61)
      .def_property_readonly("modulus", &PrimeField::modulus)
      .def("reduce", [](const PrimeField& f, uint64_t v) {
        return f.reduce(v).value;
      })
      .def("from_signed", [](const PrimeField& f, int64_t v) {
        return f.from_signed(v).value;
      })
      .def("to_signed", [](const PrimeField& f, uint64_t a) {
        return f.to_signed(f.reduce(a));
      })
      .def("add", [](const PrimeField& f, uint64_t a, uint64_t b) {
        return f.add(f.reduce(a), f.reduce(b)).value;
      })
      .def("sub", [](const PrimeField& f, uint64_t a, uint64_t b) {
        return f.sub(f.reduce(a), f.reduce(b)).value;
      })
      .def("mul", [](const PrimeField& f, uint64_t a, uint64_t b) {
        return f.mul(f.reduce(a), f.reduce(b)).value;
      })
      .def("inv", [](const PrimeField& f, uint64_t a) {
        return f.inv(f.reduce(a)).value;
      })
      .def("pow", [](const PrimeField& f, uint64_t a, int64_t e) {
        return f.pow(f.reduce(a), e).value;
      });
  m.def("is_prime", &IsPrime, py::arg("n"));
  m.attr("MERSENNE61") = kMersenne61;
}

void BindParams(py::module_& m) {
  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init(&BuildParams), py::arg("scheme"), py::arg("N"),
           py::arg("P"), py::arg("B"), py::arg("r"), py::arg("r_prime"),
           py::arg("q") = kMersenne61,
           py::arg("alphas") = std::vector<uint64_t>{})
      .def_property_readonly("scheme",
                             [](const SystemParams& p) { return ToString(p.scheme); })
      .def_readonly("N", &SystemParams::num_databases)
      .def_readonly("P", &SystemParams::num_subpackets)
      .def_readonly("B", &SystemParams::num_segments)
      .def_readonly("ell", &SystemParams::subpacket_size)
      .def_property_readonly("L", &SystemParams::model_size)
      .def_property_readonly("q",
                             [](const SystemParams& p) { return p.field.modulus(); })
      .def_property_readonly(
          "r", [](const SystemParams& p) { return ToFraction(p.uplink_rate); })
      .def_property_readonly(
          "r_prime",
          [](const SystemParams& p) { return ToFraction(p.downlink_rate); })
      .def_property_readonly("alphas",
                             [](const SystemParams& p) {
                               return ToValues({p.alphas.values().begin(),
                                                p.alphas.values().end()});
                             })
      .def_property_readonly("uplink_count", &SystemParams::uplink_count)
      .def_property_readonly("downlink_count", &SystemParams::downlink_count)
      .def_property_readonly("storage_noise_degree",
                             &SystemParams::storage_noise_degree)
      .def_property_readonly("answer_degree", &SystemParams::answer_degree);
  m.def("subpacketization",
        [](size_t n, const std::string& scheme) {
          return Subpacketization(n, ParseScheme(scheme));
        },
        py::arg("N"), py::arg("scheme"));
}

void BindStorage(py::module_& m) {
  m.def("encode_subpacket",
        [](uint64_t q, const std::vector<uint64_t>& plain,
           const std::vector<uint64_t>& noise, uint64_t alpha,
           int64_t noise_degree) {
          const PrimeField f(q);
          const auto w = ToElements(f, plain);
          const auto z = ToElements(f, noise);
          return EncodeSubpacket(f, w, z, f.reduce(alpha), noise_degree).value;
        },
        py::arg("q"), py::arg("plain"), py::arg("noise"), py::arg("alpha"),
        py::arg("noise_degree"));
  m.def("decode_read_answers",
        [](const std::vector<uint64_t>& answers, const SystemParams& params,
           std::optional<std::vector<uint64_t>> alphas) {
          const auto a = ToElements(params.field, answers);
          if (!alphas) return ToValues(DecodeReadAnswers(a, params));
          const auto pts = ToElements(params.field, *alphas);
          return ToValues(DecodeReadAnswers(a, pts, params));
        },
        py::arg("answers"), py::arg("params"), py::arg("alphas") = py::none());
  m.def("storage_complexity",
        [](const SystemParams& p) { return ComputeStorageComplexity(p).symbols; },
        py::arg("params"));
}

void BindPermutations(py::module_& m) {
  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<size_t>>(), py::arg("image"))
      .def_static("identity", &Permutation::Identity, py::arg("m"))
      .def("__call__", &Permutation::operator(), py::arg("k"))
      .def("inverse", &Permutation::inverse, py::arg("k"))
      .def_property_readonly("image", &Permutation::image)
      .def("__len__", &Permutation::size)
      .def("__eq__", [](const Permutation& a, const Permutation& b) {
        return a == b;
      })
      .def("__repr__", [](const Permutation& p) {
        std::string out = "Permutation([";
        for (size_t i = 0; i < p.size(); ++i) {
          out += (i ? ", " : "") + std::to_string(p.image()[i]);
        }
        return out + "])";
      });
  py::class_<PermutationSet>(m, "PermutationSet")
      .def(py::init([](std::vector<Permutation> within,
                       std::optional<Permutation> inter) {
             return PermutationSet{std::move(within), std::move(inter)};
           }),
           py::arg("within"), py::arg("inter") = py::none())
      .def_readonly("within", &PermutationSet::within)
      .def_readonly("inter", &PermutationSet::inter);
  m.def("real_to_permuted",
        [](Index real, const PermutationSet& perms, const std::string& scheme) {
          const auto p = RealToPermuted({real.first, real.second}, perms,
                                        ParseScheme(scheme));
          return Index{p.subpacket, p.segment};
        },
        py::arg("real"), py::arg("perms"), py::arg("scheme"));
  m.def("permuted_to_real",
        [](Index permuted, const PermutationSet& perms,
           const std::string& scheme) {
          const auto r = PermutedToReal({permuted.first, permuted.second},
                                        perms, ParseScheme(scheme));
          return Index{r.subpacket, r.segment};
        },
        py::arg("permuted"), py::arg("perms"), py::arg("scheme"));
  m.def("reference_permutations", [](const std::string& scheme) {
    return ParseScheme(scheme) == Scheme::kCase1 ? ReferencePermutationsCase1()
                                                 : ReferencePermutationsCase2();
  }, py::arg("scheme"));
}

void BindClient(py::module_& m) {
  m.def("combine_update",
        [](uint64_t q, const std::vector<uint64_t>& delta, uint64_t alpha,
           uint64_t z) {
          const PrimeField f(q);
          const auto d = ToElements(f, delta);
          return CombineUpdate(f, d, f.reduce(alpha), f.reduce(z)).value;
        },
        py::arg("q"), py::arg("delta"), py::arg("alpha"), py::arg("z"));
  m.def("top_r_select",
        [](const std::vector<double>& scores, const SystemParams& params) {
          std::vector<Index> out;
          for (const auto& r : TopRSelect(scores, params)) {
            out.emplace_back(r.subpacket, r.segment);
          }
          return out;
        },
        py::arg("scores"), py::arg("params"));
}

void BindLeakage(py::module_& m) {
  m.def("entropy_hat", &leakage::EntropyHat, py::arg("P"), py::arg("B"),
        py::arg("Pr"));
  m.def("entropy_tilde", &leakage::EntropyTilde, py::arg("P"), py::arg("B"),
        py::arg("Pr"));
  m.def("pmf_hat",
        [](size_t p, size_t b, size_t pr) {
          return PmfToDict(leakage::PmfHat(p, b, pr));
        },
        py::arg("P"), py::arg("B"), py::arg("Pr"));
  m.def("pmf_tilde",
        [](size_t p, size_t b, size_t pr) {
          return PmfToDict(leakage::PmfTilde(p, b, pr));
        },
        py::arg("P"), py::arg("B"), py::arg("Pr"));
  m.def("brute_force_entropies",
        [](size_t p, size_t b, size_t pr) {
          const auto r = leakage::BruteForceEntropies(p, b, pr);
          py::dict out;
          out["entropy_hat"] = r.entropy_hat;
          out["entropy_tilde"] = r.entropy_tilde;
          out["subsets"] = r.subsets;
          return out;
        },
        py::arg("P"), py::arg("B"), py::arg("Pr"));
  m.def("sweep_leakage",
        [](size_t p, size_t pr, const std::vector<size_t>& segments) {
          py::list out;
          for (const auto& row : leakage::SweepLeakage(p, pr, segments)) {
            py::dict d;
            d["B"] = row.segments;
            d["entropy_hat"] = row.entropy_hat;
            d["entropy_tilde"] = row.entropy_tilde;
            d["storage_case1"] = row.storage_case1;
            d["storage_case2"] = row.storage_case2;
            d["subsets"] = py::int_(py::str(row.subsets.str()));
            out.append(d);
          }
          return out;
        },
        py::arg("P"), py::arg("Pr"), py::arg("segments"));
}

void BindCosts(py::module_& m) {
  m.def("formula_costs",
        [](const SystemParams& p) {
          const auto f = ComputeFormulaCosts(p);
          py::dict out;
          out["reading"] = f.reading;
          out["writing"] = f.writing;
          out["reading_ceil"] = ToFraction(f.reading_ceil);
          out["writing_ceil"] = ToFraction(f.writing_ceil);
          return out;
        },
        py::arg("params"));
}

void BindSimulation(py::module_& m) {
  m.def("simulate",
        [](const py::object& config, std::optional<uint64_t> seed) {
          nlohmann::json j = ToJson(config);
          if (seed) j["seed"] = *seed;
          std::vector<RoundReport> reports;
          {
            py::gil_scoped_release release;
            Simulation sim(ParseSimulationConfig(j));
            reports = sim.Run();
          }
          nlohmann::json out = nlohmann::json::array();
          for (const auto& r : reports) out.push_back(RoundReportToJson(r));
          return FromJson(out);
        },
        py::arg("config"), py::arg("seed") = py::none(),
        "Runs every round of a JSON config and returns the round reports.");
  m.def("verify_examples", [] {
    py::list out;
    for (const auto& c : VerifyWorkedExamples()) {
      out.append(py::make_tuple(c.name, c.passed, c.detail));
    }
    return out;
  });
}

}  // namespace
}  // namespace pruw

PYBIND11_MODULE(_core, m) {
  m.doc() = "Private read-update-write over coded databases";
  pruw::BindErrors(m);
  pruw::BindField(m);
  pruw::BindParams(m);
  pruw::BindStorage(m);
  pruw::BindPermutations(m);
  pruw::BindClient(m);
  pruw::BindLeakage(m);
  pruw::BindCosts(m);
  pruw::BindSimulation(m);
}

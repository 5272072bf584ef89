// Copyright 2026 The qifl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "qifl/cli.hpp"
#include "qifl/csv_io.hpp"
#include "qifl/dalenius.hpp"
#include "qifl/gains.hpp"
#include "qifl/measures.hpp"
#include "qifl/propcheck.hpp"

namespace py = pybind11;

// Rational <-> fractions.Fraction (ints are accepted on the way in).
namespace pybind11::detail {

template <>
struct type_caster<qifl::Rational> {
  PYBIND11_TYPE_CASTER(qifl::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr())) {
      return false;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) {
      return false;
    }
    const auto num = py::str(src.attr("numerator")).cast<std::string>();
    const auto den = py::str(src.attr("denominator")).cast<std::string>();
    auto parsed = qifl::Rational::parse(den == "1" ? num : num + "/" + den);
    if (!parsed) return false;
    value = *parsed;
    return true;
  }

  static handle cast(const qifl::Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ num(py::reinterpret_steal<py::object>(
        PyLong_FromString(r.numerator_string().c_str(), nullptr, 10)));
    py::int_ den(py::reinterpret_steal<py::object>(
        PyLong_FromString(r.denominator_string().c_str(), nullptr, 10)));
    return fraction(num, den).release();
  }
};

// ExtRational <-> Fraction, with +inf as float('inf').
template <>
struct type_caster<qifl::ExtRational> {
  PYBIND11_TYPE_CASTER(qifl::ExtRational, const_name("fractions.Fraction | float"));

  bool load(handle src, bool convert) {
    if (PyFloat_Check(src.ptr())) {
      const double v = PyFloat_AsDouble(src.ptr());
      if (std::isinf(v) && v > 0) {
        value = qifl::ExtRational::infinity();
        return true;
      }
      return false;
    }
    make_caster<qifl::Rational> inner;
    if (!inner.load(src, convert)) return false;
    value = qifl::ExtRational(cast_op<qifl::Rational>(inner));
    return true;
  }

  static handle cast(const qifl::ExtRational& v, return_value_policy p,
                     handle parent) {
    if (v.is_infinite()) {
      return PyFloat_FromDouble(std::numeric_limits<double>::infinity());
    }
    return make_caster<qifl::Rational>::cast(v.value(), p, parent);
  }
};

template <>
struct type_caster<qifl::Labels> {
  PYBIND11_TYPE_CASTER(qifl::Labels, const_name("list[str]"));

  bool load(handle src, bool convert) {
    make_caster<std::vector<std::string>> inner;
    if (!inner.load(src, convert)) return false;
    value = qifl::Labels(cast_op<std::vector<std::string>&&>(std::move(inner)));
    return true;
  }

  static handle cast(const qifl::Labels& l, return_value_policy p, handle parent) {
    return make_caster<std::vector<std::string>>::cast(l.names(), p, parent);
  }
};

}  // namespace pybind11::detail

namespace {

using Rows = std::vector<std::vector<qifl::Rational>>;

Rows rows_of(const qifl::Matrix& m) {
  Rows out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out[r].assign(m.row(r).begin(), m.row(r).end());
  }
  return out;
}

py::object witness_dict(const std::optional<qifl::Witness>& w) {
  if (!w) return py::none();
  py::dict d;
  if (w->observation) d["obs"] = *w->observation;
  if (w->secret) d["secret"] = *w->secret;
  if (w->other_secret) d["other_secret"] = *w->other_secret;
  if (w->action) d["action"] = *w->action;
  return d;
}

qifl::LiftFormula formula_from(const std::string& name) {
  if (name == "channel-over-marginal") {
    return qifl::LiftFormula::kChannelOverMarginal;
  }
  if (name == "posterior-over-prior") return qifl::LiftFormula::kPosteriorOverPrior;
  if (name == "joint-over-product") return qifl::LiftFormula::kJointOverProduct;
  throw qifl::Error(qifl::ErrorKind::kInvalidArgument,
                    "unknown lift formula '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_qifl, m) {
  m.doc() = "Exact leakage analysis of finite channels";

  static py::handle error_type = PyErr_NewException("qifl.QiflError",
                                                    PyExc_ValueError, nullptr);
  m.attr("QiflError") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qifl::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(qifl::to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<qifl::Prior>(m, "Prior")
      .def(py::init(&qifl::Prior::make), py::arg("support"), py::arg("masses"))
      .def_static("uniform", &qifl::Prior::uniform)
      .def_static("point", &qifl::Prior::point)
      .def_property_readonly("support", &qifl::Prior::support)
      .def_property_readonly("masses", &qifl::Prior::masses)
      .def("full_support", &qifl::Prior::full_support)
      .def("__eq__", [](const qifl::Prior& a, const qifl::Prior& b) { return a == b; })
      .def("__repr__", [](const qifl::Prior& p) { return qifl::to_csv(p); });

  py::class_<qifl::Channel>(m, "Channel")
      .def(py::init([](qifl::Labels s, qifl::Labels o, const Rows& rows) {
             return qifl::make_channel(std::move(s), std::move(o), rows);
           }),
           py::arg("secrets"), py::arg("observations"), py::arg("rows"))
      .def_property_readonly("secrets", &qifl::Channel::secrets)
      .def_property_readonly("observations", &qifl::Channel::observations)
      .def_property_readonly("rows",
                             [](const qifl::Channel& c) { return rows_of(c.entries()); })
      .def("non_interacting", &qifl::Channel::non_interacting)
      .def("__eq__", [](const qifl::Channel& a, const qifl::Channel& b) { return a == b; })
      .def("__repr__", [](const qifl::Channel& c) { return qifl::to_csv(c); });

  py::class_<qifl::GainFunction>(m, "GainFunction")
      .def(py::init([](qifl::Labels a, qifl::Labels s, const Rows& rows) {
             return qifl::GainFunction::make(std::move(a), std::move(s), rows);
           }),
           py::arg("actions"), py::arg("secrets"), py::arg("rows"))
      .def_property_readonly("actions", &qifl::GainFunction::actions)
      .def_property_readonly("secrets", &qifl::GainFunction::secrets)
      .def_property_readonly(
          "rows", [](const qifl::GainFunction& g) { return rows_of(g.gains()); })
      .def("__repr__", [](const qifl::GainFunction& g) { return qifl::to_csv(g); });

  py::class_<qifl::Joint>(m, "Joint")
      .def(py::init([](qifl::Labels r, qifl::Labels c, const Rows& rows) {
             return qifl::Joint::make(std::move(r), std::move(c),
                                      qifl::Matrix::from_rows(rows));
           }),
           py::arg("row_labels"), py::arg("col_labels"), py::arg("rows"))
      .def_property_readonly("row_labels", &qifl::Joint::row_labels)
      .def_property_readonly("col_labels", &qifl::Joint::col_labels)
      .def_property_readonly("rows",
                             [](const qifl::Joint& j) { return rows_of(j.entries()); })
      .def("__repr__", [](const qifl::Joint& j) { return qifl::to_csv(j); });

  m.def("identity_channel", &qifl::identity_channel);
  m.def("joint", &qifl::joint);
  m.def("compose", &qifl::compose, py::arg("d"), py::arg("c"));
  m.def("hyper", [](const qifl::Prior& pi, const qifl::Channel& c) {
    const qifl::Hyper h = qifl::hyper(pi, c);
    py::list out;
    for (std::size_t k = 0; k < h.size(); ++k) {
      out.append(py::make_tuple(h.observations[k], h.marginals[k],
                                h.posteriors[k]));
    }
    return out;
  }, "List of (observation, marginal, posterior) for retained observations.");
  m.def("factorize", [](const qifl::Joint& j) {
    auto f = qifl::factorize(j);
    return py::make_tuple(f.rho, f.d);
  });

  m.def("prior_vulnerability", &qifl::prior_vulnerability);
  m.def("posterior_vulnerability", &qifl::posterior_vulnerability);
  m.def("max_posterior_vulnerability", &qifl::max_posterior_vulnerability);
  m.def("mult_leakage", &qifl::mult_leakage);
  m.def("max_case_leakage", &qifl::max_case_leakage);
  m.def("bayes_capacity", &qifl::bayes_capacity);
  m.def("lift", [](const qifl::Prior& pi, const qifl::Channel& c,
                   const std::string& formula) {
    auto r = qifl::lift(pi, c, formula_from(formula));
    return py::make_tuple(r.value, witness_dict(r.witness));
  }, py::arg("prior"), py::arg("channel"),
        py::arg("formula") = "channel-over-marginal",
        "(value, witness) with witness keys obs and secret.");
  m.def("lift_capacity", &qifl::lift_capacity);
  m.def("verify_ldp", &qifl::verify_ldp, py::arg("channel"), py::arg("factor"));
  m.def("verify_lip", &qifl::verify_lip, py::arg("prior"), py::arg("channel"),
        py::arg("factor"));
  m.def("check_ordering_chain", [](const qifl::GainFunction& g,
                                   const qifl::Prior& pi, const qifl::Channel& c) {
    const auto rep = qifl::check_ordering_chain(g, pi, c);
    py::list links;
    for (const auto& l : rep.links) {
      links.append(py::make_tuple(l.relation, l.lhs, l.rhs, l.holds));
    }
    return links;
  }, "List of (relation, lhs, rhs, holds).");

  m.def("gid", &qifl::gid);
  m.def("reciprocal_gain", &qifl::reciprocal_gain);
  m.def("max_prior_vulnerability", &qifl::max_prior_vulnerability);
  m.def("pointwise_gain", &qifl::pointwise_gain);

  m.def("dalenius_lift", [](const qifl::Joint& j, const qifl::Channel& c) {
    const auto r = qifl::dalenius_lift(qifl::Correlation(j), c);
    py::dict d;
    d["lift_rho_dc"] = r.lhs;
    d["lift_rho_d"] = r.lift_rho_d;
    d["lift_pi_c"] = r.lift_pi_c;
    d["bound"] = r.bound;
    d["holds"] = r.holds;
    return d;
  });
  m.def("dalenius_capacity_bound", [](const qifl::Joint& j, const qifl::Channel& c,
                                      const qifl::GainFunction& g) {
    const auto r = qifl::dalenius_capacity_bound(qifl::Correlation(j), c, g);
    py::dict d;
    d["max_case_leakage"] = r.leak;
    d["lift_capacity_dc"] = r.cap_dc;
    d["lift_capacity_c"] = r.cap_c;
    d["holds"] = r.holds;
    return d;
  });

  m.def("parse_channel_csv", &qifl::parse_channel_csv);
  m.def("parse_prior_csv", &qifl::parse_prior_csv);
  m.def("parse_gain_csv", &qifl::parse_gain_csv);
  m.def("parse_joint_csv", &qifl::parse_joint_csv);
  m.def("to_csv", py::overload_cast<const qifl::Channel&>(&qifl::to_csv));
  m.def("to_csv", py::overload_cast<const qifl::Prior&>(&qifl::to_csv));
  m.def("to_csv", py::overload_cast<const qifl::GainFunction&>(&qifl::to_csv));
  m.def("to_csv", py::overload_cast<const qifl::Joint&>(&qifl::to_csv));

  m.def("run_registry", [](std::size_t trials, std::uint64_t seed) {
    qifl::propcheck::InstanceSpec spec;
    spec.trials = trials;
    spec.seed = seed;
    spec.validate();
    py::list out;
    for (const auto& r : qifl::propcheck::run_registry(spec)) {
      py::dict d;
      d["property"] = r.property;
      d["trials_run"] = r.trials_run;
      d["discarded"] = r.discarded;
      d["passed"] = r.passed;
      out.append(d);
    }
    return out;
  }, py::arg("trials") = 1000, py::arg("seed") = qifl::propcheck::kDefaultSeed);

  m.def("run_cli", [](const std::vector<std::string>& args,
                      std::optional<std::string> seed_env) {
    const auto r = qifl::cli::run_command_line(args, seed_env);
    return py::make_tuple(r.exit_code, r.out, r.err);
  }, py::arg("args"), py::arg("seed_env") = py::none(),
        "(exit_code, stdout, stderr) of the command-line tool.");
}

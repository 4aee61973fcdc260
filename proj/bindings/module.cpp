#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "zzschur/oracle.hpp"
#include "zzschur/report.hpp"
#include "zzschur/tilting.hpp"

namespace py = pybind11;
using namespace zzschur;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

py::object report_py(const VerifyReport& r) { return json_to_py(report_to_json(r)); }

Multipartition mp_from_lists(const std::vector<std::vector<int>>& parts) {
  Multipartition mp;
  for (const auto& p : parts) mp.parts.push_back(trim(p));
  return mp;
}

}  // namespace

PYBIND11_MODULE(_zzschur, m) {
  m.doc() = "exact-arithmetic engine for extended zigzag Schur algebras";

  m.def("schur_dim", [](int n, int d, int ell) {
    auto z = zigzag(ell);
    return SchurAlgebra(&z, n, d).dim();
  },
        py::arg("n"), py::arg("d"), py::arg("ell"),
        "dimension of T^Z(n,d) for the zigzag algebra on ell+1 vertices");

  m.def("zigzag_dim", [](int ell) { return zigzag(ell).dim(); }, py::arg("ell"));

  m.def("tilting_dim", [](int ell) {
    auto z = zigzag(ell);
    return TiltingBimodule(&z).dim();
  },
        py::arg("ell"));

  m.def("eta_basis", [](int n, int d, int ell) {
    auto z = zigzag(ell);
    SchurAlgebra s(&z, n, d);
    std::vector<std::string> out;
    for (int i = 0; i < s.dim(); ++i) out.push_back(s.index_name(i));
    return out;
  },
        py::arg("n"), py::arg("d"), py::arg("ell"));

  m.def("lr_coeff", [](const std::vector<int>& la, const std::vector<int>& mu,
                       const std::vector<int>& nu) {
    return lr_coeff(trim(la), trim(mu), trim(nu));
  },
        py::arg("la"), py::arg("mu"), py::arg("nu"),
        "Littlewood-Richardson coefficient c^nu_{la,mu}");

  m.def("kostka", [](int n, int ell, const std::vector<std::vector<int>>& la,
                     const std::vector<std::vector<int>>& mu) {
    auto z = zigzag(ell);
    auto alph = colored_alphabets(z);
    Weight w;
    w.comp.assign(ell + 1, Composition(n, 0));
    for (int i = 0; i <= ell && i < static_cast<int>(mu.size()); ++i)
      for (int l = 0; l < n && l < static_cast<int>(mu[i].size()); ++l)
        w.comp[i][l] = mu[i][l];
    return kostka(alph, mp_from_lists(la), w, n);
  },
        py::arg("n"), py::arg("ell"), py::arg("la"), py::arg("mu"),
        "number of standard colored tableaux of shape la and left weight mu");

  m.def("delta_character",
        [](int n, int ell, const std::vector<std::vector<int>>& la) {
          auto z = zigzag(ell);
          auto alph = colored_alphabets(z);
          Character ch = delta_character(alph, mp_from_lists(la), n);
          py::dict out;
          for (const auto& [w, c] : ch) out[py::str(w.str())] = py::int_(c);
          return out;
        },
        py::arg("n"), py::arg("ell"), py::arg("la"));

  m.def("dominant_weights", [](int n, int d, int ell) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& mp : dominant_weights(n, d, ell)) out.push_back(mp.parts);
    return out;
  },
        py::arg("n"), py::arg("d"), py::arg("ell"));

  m.def("verify_heredity", [](int ell) { return report_py(check_heredity(ell)); },
        py::arg("ell"));
  m.def("verify_lzprime", [](int ell) { return report_py(check_lzprime(ell)); },
        py::arg("ell"));
  m.def("verify_integrality",
        [](int n, int d, int ell) { return report_py(check_integrality(n, d, ell)); },
        py::arg("n"), py::arg("d"), py::arg("ell"));
  m.def("verify_forms", [](int ell) { return report_py(check_forms(ell)); },
        py::arg("ell"));
  m.def("verify_kostka",
        [](int n, int d, int ell) { return report_py(check_kostka(n, d, ell)); },
        py::arg("n"), py::arg("d"), py::arg("ell"));
  m.def("verify_dims",
        [](int n, int d, int ell) {
          return report_py(check_dimension_identity(n, d, ell));
        },
        py::arg("n"), py::arg("d"), py::arg("ell"));
  m.def("verify_tilting",
        [](int n, int d, int ell) { return report_py(check_tilting(n, d, ell)); },
        py::arg("n"), py::arg("d"), py::arg("ell"));
  m.def("verify_ringel",
        [](int n, int d, int ell, const std::string& field, int jobs) {
          return report_py(verify_ringel(n, d, ell, Field::parse(field), jobs));
        },
        py::arg("n"), py::arg("d"), py::arg("ell"), py::arg("field") = "Q",
        py::arg("jobs") = 1,
        "full Ringel self-duality report for T^Z(n,d) over the given field");

  m.def("dump_tilting", [](int ell) {
    auto z = zigzag(ell);
    TiltingBimodule t(&z);
    return json_to_py(tilting_to_json(t));
  },
        py::arg("ell"));

  m.def("acceptance_report", [](int jobs) {
    py::list out;
    for (const auto& r : acceptance_suite(jobs)) out.append(report_py(r));
    return out;
  },
        py::arg("jobs") = 1, "the full ten-criterion acceptance suite");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dworkgal/counting.hpp"
#include "dworkgal/delpezzo.hpp"
#include "dworkgal/galoisrep.hpp"
#include "dworkgal/reptheory.hpp"

namespace py = pybind11;
using namespace dworkgal;

namespace {

Rat lam(const std::string& s) { return parse_rational(s); }

cnt::Model model_of(const std::string& name) {
  if (name == "x") return cnt::Model::DworkX;
  if (name == "m") return cnt::Model::MirrorM;
  if (name == "y") return cnt::Model::ResolvedY;
  raise(ErrorCode::ParseError, "model must be x, m or y");
}

py::dict count(const std::string& model, const std::string& lambda,
               uint64_t p, int k, int jobs) {
  auto F = ff::FieldSpec::make(p, k);
  cnt::CountReport rep;
  switch (model_of(model)) {
    case cnt::Model::DworkX: rep = cnt::count_x(lam(lambda), *F, jobs); break;
    case cnt::Model::MirrorM: rep = cnt::count_m(lam(lambda), *F, jobs); break;
    case cnt::Model::ResolvedY: rep = cnt::count_y(lam(lambda), *F, jobs); break;
  }
  py::dict out;
  out["model"] = model;
  out["lambda"] = to_string(rep.spec.lambda);
  out["p"] = rep.p;
  out["k"] = rep.k;
  out["q"] = rep.q;
  out["count"] = rep.n_points;
  return out;
}

py::dict trace_identity(const std::string& lambda, uint64_t p, int k,
                        int jobs) {
  auto F = ff::FieldSpec::make(p, k);
  auto rep = cnt::verify_trace_identity(lam(lambda), *F, jobs);
  py::dict out;
  out["q"] = rep.q;
  out["t_ns_predicted"] = rep.t_ns_predicted;
  out["x_count"] = rep.x_count;
  out["y_count"] = rep.y_count;
  out["t_transcendental"] = rep.t_transcendental;
  out["passed"] = rep.passed;
  out["weil_bound_ok"] = rep.weil_bound_ok;
  return out;
}

py::dict curve_counts(const std::string& lambda, uint64_t p, int k) {
  auto F = ff::FieldSpec::make(p, k);
  auto rep = cnt::curve_counts(lam(lambda), *F);
  py::dict out;
  out["q"] = rep.q;
  out["n_x"] = rep.n_x;
  out["n_y"] = rep.n_y;
  out["roots_x"] = rep.roots_x;
  out["roots_y"] = rep.roots_y;
  out["bijection_ok"] = rep.bijection_ok;
  return out;
}

py::dict character_table() {
  const auto& t = rep::character_table_h();
  py::dict rows;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<long long> vals;
    for (const auto& v : t.rows[i]) vals.push_back(v.a.convert_to<long long>());
    rows[py::str(t.names[i])] = vals;
  }
  py::dict out;
  out["class_sizes"] = t.class_sizes;
  out["degrees"] = t.degrees;
  out["rows"] = rows;
  return out;
}

py::dict decompose_chipr() {
  auto m = rep::decompose_chi_pr();
  const auto& t = rep::character_table_h();
  py::dict out;
  for (size_t i = 0; i < m.size(); ++i)
    out[py::str(t.names[i])] = m[i].convert_to<long long>();
  return out;
}

py::list eigen_report(int dim, const std::string& lambda) {
  auto rep = gal::joint_eigenspaces(gal::load_matrices(dim));
  py::list out;
  for (const auto& e : rep.entries) {
    if (e.multiplicity == 0) continue;
    py::dict row;
    row["sign_vector"] = e.sign_vector.to_string();
    row["multiplicity"] = e.multiplicity;
    row["square_class"] =
        gal::signvector_to_squareclass(lam(lambda), e.sign_vector).value.str();
    out.append(row);
  }
  return out;
}

py::list matrices(int dim) {
  py::list out;
  for (const auto& m : gal::load_matrices(dim)) {
    py::dict d;
    d["label"] = m.label;
    d["basis"] = m.basis;
    d["entries"] = m.entries;
    out.append(d);
  }
  return out;
}

py::dict crosscheck(const std::string& lambda, uint64_t p, int k, int jobs) {
  auto rep = gal::crosscheck_trace(lam(lambda), p, k, jobs);
  py::dict out;
  out["matrix_trace"] = rep.matrix_trace;
  out["t_ns"] = rep.t_ns;
  out["count_side"] = rep.count_side;
  out["passed"] = rep.passed;
  return out;
}

py::dict lines(const std::string& lambda, int i, int j, int r) {
  auto S = dp::surface_model(i, j, r, lam(lambda));
  auto ls = dp::build_lines(S);
  py::list items;
  for (const auto& l : ls) {
    py::dict d;
    d["family"] = l.family;
    d["root"] = l.root_index;
    d["sign"] = l.sign;
    py::list coeffs;
    for (const auto& c : l.linear) coeffs.append(c.serialize());
    d["linear"] = coeffs;
    d["verified"] = dp::verify_line(S, l).passed;
    items.append(d);
  }
  py::dict out;
  out["count"] = ls.size();
  out["lines"] = items;
  return out;
}

std::vector<int> galois_lines(const std::string& lambda, int i, int j, int r,
                              unsigned mask) {
  auto S = dp::surface_model(i, j, r, lam(lambda));
  auto ls = dp::build_lines(S);
  return dp::galois_permutation(S, ls, alg::SignVector::from_mask(mask));
}

py::object admissible(const std::string& lambda, uint64_t p,
                      bool need_mirror) {
  auto a = cnt::admissible(lam(lambda), p, need_mirror);
  return py::make_tuple(a.ok, a.reason);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic of the Galois action on NS of Dwork surfaces";

  py::register_exception<Error>(m, "DworkgalError");

  m.def("count", &count, py::arg("model"), py::arg("lambda_"), py::arg("p"),
        py::arg("k") = 1, py::arg("jobs") = 0,
        "projective point count of the x/m/y model over F_{p^k}");
  m.def("t_ns_predicted",
        [](const std::string& lambda, uint64_t p, int k) {
          auto F = ff::FieldSpec::make(p, k);
          return cnt::t_ns_predicted(lam(lambda), *F);
        },
        py::arg("lambda_"), py::arg("p"), py::arg("k") = 1);
  m.def("trace_identity", &trace_identity, py::arg("lambda_"), py::arg("p"),
        py::arg("k") = 1, py::arg("jobs") = 0);
  m.def("verify_wan",
        [](const std::string& lambda, uint64_t p, int k, int jobs) {
          return cnt::verify_wan(lam(lambda), p, k, jobs);
        },
        py::arg("lambda_"), py::arg("p"), py::arg("k") = 1,
        py::arg("jobs") = 0);
  m.def("verify_mod3q",
        [](const std::string& lambda, uint64_t p, int k, int jobs) {
          return cnt::verify_mod3q(lam(lambda), p, k, jobs);
        },
        py::arg("lambda_"), py::arg("p"), py::arg("k") = 1,
        py::arg("jobs") = 0);
  m.def("curve_counts", &curve_counts, py::arg("lambda_"), py::arg("p"),
        py::arg("k") = 1);
  m.def("admissible", &admissible, py::arg("lambda_"), py::arg("p"),
        py::arg("need_mirror") = true);
  m.def("legendre",
        [](long long a, uint64_t p) { return ff::legendre(Int(a), p); },
        py::arg("a"), py::arg("p"));
  m.def("irreducible_modulus", &ff::irreducible_modulus, py::arg("p"),
        py::arg("k"));
  m.def("class_sizes", [] {
    std::vector<int> out;
    for (const auto& c : rep::conjugacy_classes().classes)
      out.push_back(c.size());
    return out;
  });
  m.def("chi_pr_row", &rep::chi_pr_row);
  m.def("character_table", &character_table);
  m.def("decompose_chipr", &decompose_chipr);
  m.def("eigen_report", &eigen_report, py::arg("dim") = 19,
        py::arg("lambda_") = "2");
  m.def("matrices", &matrices, py::arg("dim") = 19);
  m.def("frobenius_trace",
        [](const std::string& lambda, uint64_t p, int dim) {
          return gal::frobenius_matrix(lam(lambda), p, dim).trace;
        },
        py::arg("lambda_"), py::arg("p"), py::arg("dim") = 19);
  m.def("crosscheck_trace", &crosscheck, py::arg("lambda_"), py::arg("p"),
        py::arg("k") = 1, py::arg("jobs") = 0);
  m.def("lines", &lines, py::arg("lambda_"), py::arg("i") = 0,
        py::arg("j") = 1, py::arg("r") = 4);
  m.def("galois_line_permutation", &galois_lines, py::arg("lambda_"),
        py::arg("i"), py::arg("j"), py::arg("r"), py::arg("mask"));
  m.def("squarefree_part", [](const std::string& r) {
    return squarefree_part(parse_rational(r)).value.str();
  });
}

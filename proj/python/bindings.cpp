#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lindeg/classifier.hpp"
#include "lindeg/enumerator.hpp"
#include "lindeg/errors.hpp"
#include "lindeg/io.hpp"
#include "lindeg/orbits.hpp"
#include "lindeg/verify.hpp"
#include "lindeg/version.hpp"

namespace py = pybind11;
using namespace lindeg;

namespace {

Decomposition make_decomposition(int n, const std::map<std::pair<int, int>, int>& summands) {
  Decomposition dec(n);
  for (const auto& [iv, k] : summands) {
    if (iv.first < 1 || iv.first > iv.second || iv.second > n)
      throw ValidationError("interval outside 1..n");
    dec.add({iv.first, iv.second}, k);
  }
  return dec;
}

std::map<std::pair<int, int>, int> summands_of(const Decomposition& dec) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [iv, k] : dec.summands()) out[{iv.a, iv.b}] = k;
  return out;
}

RankSequence ranks_from_rows(int m, const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  ExtendedRanks r(n);
  for (int a = 1; a <= n; ++a) {
    const auto& row = rows[static_cast<std::size_t>(a - 1)];
    if (static_cast<int>(row.size()) != n - a + 1)
      throw ValidationError("row " + std::to_string(a) + " of the rank table must have " +
                            std::to_string(n - a + 1) + " entries");
    for (int b = a; b <= n; ++b) r.set(a, b, row[static_cast<std::size_t>(b - a)]);
  }
  return RankSequence(m, std::move(r));
}

std::vector<std::vector<int>> rows_of(const RankSequence& r) {
  std::vector<std::vector<int>> rows;
  for (int a = 1; a <= r.n(); ++a) {
    std::vector<int> row;
    for (int b = a; b <= r.n(); ++b) row.push_back(r.table()(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_lindeg, mod) {
  mod.doc() = "Linear degenerations of partial flag varieties";
  mod.attr("__version__") = kVersion;

  py::register_exception<GuardExceeded>(mod, "GuardExceeded");
  auto& validation = py::register_exception<ValidationError>(mod, "ValidationError", PyExc_ValueError);
  py::register_exception<NotRealizable>(mod, "NotRealizable", validation.ptr());
  py::register_exception<NotFlat>(mod, "NotFlat");
  py::register_exception<NotIrreducible>(mod, "NotIrreducible");
  py::register_exception<PreconditionError>(mod, "PreconditionError");

  mod.def("euler_form", [](const std::vector<int>& d, const std::vector<int>& e) { return euler_form(d, e); });

  mod.def("hom_dim", [](int n, const std::map<std::pair<int, int>, int>& a,
                        const std::map<std::pair<int, int>, int>& b) {
    return hom_dim(make_decomposition(n, a), make_decomposition(n, b));
  });
  mod.def("ext_dim", [](int n, const std::map<std::pair<int, int>, int>& a,
                        const std::map<std::pair<int, int>, int>& b) {
    return ext_dim(make_decomposition(n, a), make_decomposition(n, b));
  });

  mod.def("decompose_from_ranks", [](int m, const std::vector<std::vector<int>>& rows) {
    return summands_of(decompose_from_ranks(ranks_from_rows(m, rows).table()));
  });
  mod.def("ranks_from_decomposition", [](int n, const std::map<std::pair<int, int>, int>& s) {
    const Decomposition dec = make_decomposition(n, s);
    std::vector<std::vector<int>> rows;
    const ExtendedRanks r = ranks_from_decomposition(dec);
    for (int a = 1; a <= n; ++a) {
      std::vector<int> row;
      for (int b = a; b <= n; ++b) row.push_back(r(a, b));
      rows.push_back(std::move(row));
    }
    return rows;
  });
  mod.def("well_behaved_rep", [](int m, const std::vector<int>& d) {
    return summands_of(well_behaved_rep(DimVector(m, d)));
  });
  mod.def("minimal_projective_resolution", [](int n, const std::map<std::pair<int, int>, int>& s) {
    const ProjectiveResolution res = minimal_projective_resolution(make_decomposition(n, s));
    return std::make_pair(summands_of(res.projective), summands_of(res.syzygy));
  });
  mod.def("is_catenoid", [](int n, const std::map<std::pair<int, int>, int>& s) {
    return is_catenoid(make_decomposition(n, s));
  });

  mod.def("enumerate_orbits", [](int m, int n) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const RankSequence& r : enumerate_orbits(m, n)) out.push_back(rows_of(r));
    return out;
  });
  mod.def("is_realizable", [](int m, const std::vector<std::vector<int>>& rows) {
    return is_realizable(ranks_from_rows(m, rows));
  });
  mod.def("degenerates_to", [](int m, const std::vector<std::vector<int>>& r,
                               const std::vector<std::vector<int>>& s) {
    return degenerates_to(ranks_from_rows(m, r), ranks_from_rows(m, s));
  });
  mod.def("representative", [](int m, const std::vector<std::vector<int>>& rows) {
    return representative(ranks_from_rows(m, rows)).zero_sets;
  });
  mod.def("hasse_dot", [](int m, int n) { return hasse_dot(enumerate_orbits(m, n)); });
  mod.def("strata_dot", &strata_dot);

  mod.def("classify_ranks_json", [](int m, const std::vector<std::vector<int>>& rows, const std::vector<int>& d) {
    return dump(to_json(classify(ranks_from_rows(m, rows), DimVector(m, d))));
  });
  mod.def("classify_problem_json", [](const std::string& text) {
    const ProblemFile p = parse_problem(text);
    return dump(to_json(classify(p.rep, p.d)));
  });
  mod.def("singular_model_mh_json", [](int m, const std::vector<int>& d, int h) {
    return dump(to_json(singular_model_Mh(m, DimVector(m, d), h)));
  });
  mod.def("singular_summary_json", [](int m, const std::vector<std::vector<int>>& rows, const std::vector<int>& d) {
    return dump(to_json(singular_summary(ranks_from_rows(m, rows), DimVector(m, d))));
  });

  mod.def("count_points", [](const std::string& text) {
    const ProblemFile p = parse_problem(text);
    return count_subreps(p.rep, p.d.values());
  });
  mod.def("singular_census", [](const std::string& text) {
    const ProblemFile p = parse_problem(text);
    const Census c = singular_point_census(p.rep, p.d);
    return std::make_pair(c.total, c.singular);
  });
  mod.def("fixed_points", [](int m, const std::vector<std::vector<std::size_t>>& zero_sets,
                             const std::vector<int>& d) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    for (const CoordinatePoint& p : fixed_points(ProjectionTuple{m, zero_sets}, d)) out.push_back(p.sets);
    return out;
  });
  mod.def("singular_witness", [](int m, const std::vector<std::vector<std::size_t>>& zero_sets,
                                 const std::vector<int>& d) {
    return construct_singular_witness(ProjectionTuple{m, zero_sets}, DimVector(m, d)).sets;
  });
  mod.def("sigma_bijection_check", [](int m, const std::vector<int>& d, int h, std::uint32_t p) {
    const SigmaCheck c = sigma_bijection_check(m, DimVector(m, d), h, p);
    py::dict out;
    out["ok"] = c.ok;
    out["total_points"] = c.total_points;
    out["singular_points"] = c.singular_points;
    out["model_points"] = c.model_points;
    out["counterexample"] = c.counterexample;
    return out;
  });

  mod.def("run_verify", [](const std::string& suite, std::uint64_t seed) {
    py::list out;
    for (const SuiteResult& s : run_verify(suite, seed)) {
      py::dict d;
      d["suite"] = s.suite;
      d["passed"] = s.passed();
      py::list props;
      for (const PropertyResult& p : s.properties) {
        py::dict pd;
        pd["name"] = p.name;
        pd["checked"] = p.checked;
        pd["failed"] = p.failed;
        pd["first_failure"] = p.first_failure;
        props.append(pd);
      }
      d["properties"] = props;
      out.append(d);
    }
    return out;
  }, py::arg("suite") = "all", py::arg("seed") = 20240601);
}

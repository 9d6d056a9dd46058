#include "lindeg/verify.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>

#include "lindeg/classifier.hpp"
#include "lindeg/enumerator.hpp"
#include "lindeg/errors.hpp"
#include "lindeg/sampling.hpp"

namespace lindeg {

bool SuiteResult::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.failed == 0; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"exthom", "classify-consistency", "roundtrip",
                                                 "sigma", "rankcomposition"};
  return names;
}

std::vector<DimVector> all_dim_vectors(int m, int n) {
  std::vector<DimVector> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(m, cur);
      return;
    }
    for (int x = next; x < m; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(rec, 1);
  return out;
}

namespace {

void record(PropertyResult& p, bool ok, const std::string& what) {
  ++p.checked;
  if (ok) return;
  if (p.failed++ == 0) p.first_failure = what;
}

SuiteResult make_suite(std::string name, std::initializer_list<const char*> properties) {
  SuiteResult s;
  s.suite = std::move(name);
  for (const char* p : properties) s.properties.push_back(PropertyResult{p, 0, 0, {}});
  return s;
}

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string show(const RankSequence& r) { return "m=" + std::to_string(r.m()) + " R=" + show(r.table().flattened()); }

std::vector<int> complement_dims(const std::vector<int>& dims, const std::vector<int>& d) {
  std::vector<int> out(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) out[i] = dims[i] - d[i];
  return out;
}

SuiteResult suite_exthom(std::uint64_t seed) {
  SuiteResult s = make_suite(
      "exthom", {"hom-table-equals-intertwiners", "hom-minus-ext-is-euler", "exthom-at-enumerated-points"});
  Rng rng(seed);
  const Field fp = Field::prime(32003);
  for (int t = 0; t < 500; ++t) {
    const int n = uniform(rng, 1, 4);
    const Decomposition a = random_decomposition(n, 5, rng);
    const Decomposition b = random_decomposition(n, 5, rng);
    const RepMatrices ma = random_base_change(realize(a, fp), rng);
    const RepMatrices mb = random_base_change(realize(b, fp), rng);
    const long long table = hom_dim(a, b);
    const long long solved = intertwiner_space_dim(ma, mb);
    record(s.properties[0], table == solved,
           a.to_string() + " vs " + b.to_string() + ": table " + std::to_string(table) +
               ", intertwiners " + std::to_string(solved));
    record(s.properties[1], table - ext_dim(a, b) == euler_form(a.dims(), b.dims()),
           a.to_string() + " vs " + b.to_string());
  }
  const Field f2 = Field::prime(2);
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= std::min(3, m - 1); ++n)
      for (const RankSequence& r : enumerate_orbits(m, n)) {
        const RepMatrices rep = representative(r).matrices(f2);
        for (const DimVector& d : all_dim_vectors(m, n)) {
          const long long euler = euler_form(d.values(), complement_dims(rep.dims(), d.values()));
          for_each_subrep(rep, d.values(), [&](const SubrepPoint& p) {
            const PointAnalysis a = analyze_point(rep, p);
            record(s.properties[2], a.hom - a.ext == euler, show(r) + " d=" + show(d.values()));
          });
        }
      }
  return s;
}

SuiteResult suite_classify(std::uint64_t) {
  SuiteResult s = make_suite("classify-consistency", {"irreducible-iff-in-U_irr", "smooth-implies-irreducible",
                                                      "flat-irr-implies-flat", "r1I-dominates-r2I"});
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) {
      const std::vector<DimVector> ds = all_dim_vectors(m, n);
      if (ds.empty()) continue;
      for (const RankSequence& r : enumerate_orbits(m, n))
        for (const DimVector& d : ds) {
          const std::string where = show(r) + " d=" + show(d.values());
          const bool irr = is_irreducible(r, d);
          const FlatFlags f = flat_flags(r, d);
          record(s.properties[0], irr == f.in_U_irr, where);
          record(s.properties[1], !is_smooth(r) || irr, where);
          record(s.properties[2], !f.flat_irr_in_stratum || f.flat_in_stratum, where);
        }
      for (const DimVector& d : ds)
        for (const Stratum& st : all_strata(n)) {
          const StratumTargets t = stratum_rank_targets(st, d);
          record(s.properties[3], degenerates_to(t.flat_irr, t.flat),
                 "I=" + st.to_string() + " d=" + show(d.values()));
        }
    }
  return s;
}

SuiteResult suite_roundtrip(std::uint64_t) {
  SuiteResult s = make_suite("roundtrip", {"representative-rank-profile", "ranks-decomposition", "well-behaved-is-r1"});
  const Field q = Field::rationals();
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const RankSequence& r : enumerate_orbits(m, n)) {
        const ProjectionTuple j = representative(r);
        const RankSequence back = RankSequence::of(j.matrices(q));
        record(s.properties[0], back == r && stratum_of(back) == stratum_of(r), show(r));
        const Decomposition dec = decompose_from_ranks(r.table());
        record(s.properties[1],
               ranks_from_decomposition(dec) == r.table() &&
                   decompose_from_ranks(ranks_from_decomposition(dec)) == dec,
               show(r));
      }
  for (int m = 2; m <= 8; ++m)
    for (int n = 1; n < m; ++n)
      for (const DimVector& d : all_dim_vectors(m, n)) {
        const RankSequence wb = RankSequence::of(well_behaved_rep(d));
        bool ok = true;
        for (int a = 1; a <= n; ++a)
          for (int b = a + 1; b <= n; ++b)
            if (wb.table()(a, b) != m + d.at(a) - d.at(b)) ok = false;
        record(s.properties[2], ok, "m=" + std::to_string(m) + " d=" + show(d.values()));
      }
  return s;
}

SuiteResult suite_sigma(std::uint64_t) {
  SuiteResult s = make_suite("sigma", {"sigma-bijection"});
  struct Instance {
    int m;
    std::vector<int> d;
    int h;
  };
  for (const Instance& in : {Instance{3, {1, 2}, 1}, Instance{4, {1, 2}, 1}, Instance{4, {1, 3}, 1}}) {
    const SigmaCheck c = sigma_bijection_check(in.m, DimVector(in.m, in.d), in.h, 2);
    record(s.properties[0], c.ok && c.model_points == c.singular_points,
           "m=" + std::to_string(in.m) + " d=" + show(in.d) + ": " + c.counterexample);
  }
  return s;
}

SuiteResult suite_rankcomposition(std::uint64_t seed) {
  SuiteResult s = make_suite("rankcomposition", {"composite-rank-lower-bound"});
  Rng rng(seed);
  const Field f = Field::prime(101);
  for (int t = 0; t < 1000; ++t) {
    const int m = uniform(rng, 3, 7);
    const int n = uniform(rng, 2, std::min(4, m - 1));
    const std::vector<DimVector> ds = all_dim_vectors(m, n);
    const DimVector& d = ds[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ds.size()) - 1))];
    std::vector<Matrix> maps;
    for (int i = 1; i < n; ++i) {
      const int lo = m - d.step(i);
      for (;;) {
        const int target = uniform(rng, lo, m);
        Matrix a = random_low_rank(f, static_cast<std::size_t>(m), static_cast<std::size_t>(m),
                                   static_cast<std::size_t>(target), rng);
        if (static_cast<int>(rank(a)) >= lo) {
          maps.push_back(std::move(a));
          break;
        }
      }
    }
    const RankSequence r = RankSequence::of(RepMatrices::from_maps(std::move(maps)));
    bool ok = true;
    for (int h = 1; h < n; ++h)
      for (int k = h; k < n; ++k)
        if (r.composite_rank(h, k) < m + d.at(h) - d.at(k + 1)) ok = false;
    record(s.properties[0], ok, show(r) + " d=" + show(d.values()));
  }
  return s;
}

}  // namespace

std::vector<SuiteResult> run_verify(const std::string& name, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  const bool all = name == "all";
  if (!all && std::find(verify_suite_names().begin(), verify_suite_names().end(), name) ==
                  verify_suite_names().end())
    throw ValidationError("unknown verify suite '" + name + "'");
  if (all || name == "exthom") out.push_back(suite_exthom(seed));
  if (all || name == "classify-consistency") out.push_back(suite_classify(seed));
  if (all || name == "roundtrip") out.push_back(suite_roundtrip(seed));
  if (all || name == "sigma") out.push_back(suite_sigma(seed));
  if (all || name == "rankcomposition") out.push_back(suite_rankcomposition(seed));
  return out;
}

}  // namespace lindeg

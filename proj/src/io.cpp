#include "lindeg/io.hpp"

#include <algorithm>
#include <sstream>

#include "lindeg/errors.hpp"

namespace lindeg {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ValidationError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

int require_int(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw ValidationError(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

Field parse_field(const json& root) {
  if (!root.contains("field")) return Field::rationals();
  const json& f = root.at("field");
  const json& kind = require(f, "kind", "field");
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") {
    const json& p = require(f, "p", "field");
    if (!p.is_number_unsigned()) throw ValidationError("field: 'p' must be a positive integer");
    const auto value = p.get<std::uint64_t>();
    if (value > 65535) throw ValidationError("field: p must be below 65536");
    return Field::prime(static_cast<std::uint32_t>(value));
  }
  throw ValidationError("field: kind must be 'rational' or 'prime'");
}

std::vector<std::size_t> parse_indices(const json& item, int m, const std::string& where) {
  const json& idx = require(item, "zero_indices", where);
  if (!idx.is_array()) throw ValidationError(where + ": zero_indices must be an array");
  std::vector<std::size_t> out;
  for (const json& x : idx) {
    if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<long long>() > m)
      throw ValidationError(where + ": zero_indices must lie in 1.." + std::to_string(m));
    out.push_back(x.get<std::size_t>());
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ValidationError(where + ": repeated index in zero_indices");
  return out;
}

Matrix parse_entries(const json& item, const Field& field, int m, const std::string& where) {
  const json& rows = require(item, "entries", where);
  const auto um = static_cast<std::size_t>(m);
  if (!rows.is_array() || rows.size() != um)
    throw ValidationError(where + ": entries must be " + std::to_string(m) + " rows");
  std::vector<std::string> flat;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != um)
      throw ValidationError(where + ": every row must have " + std::to_string(m) + " entries");
    for (const json& e : row) {
      if (!e.is_string()) throw ValidationError(where + ": entries must be exact strings such as \"-3/7\"");
      flat.push_back(e.get<std::string>());
    }
  }
  try {
    return Matrix::from_strings(field, um, um, flat);
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("problem file is not valid JSON: ") + e.what());
  }
  return parse_problem(root);
}

ProblemFile parse_problem(const json& root) {
  if (!root.is_object()) throw ValidationError("problem file must be a JSON object");
  const int m = require_int(root, "m", "problem");
  const int n = require_int(root, "n", "problem");
  if (m < 1) throw ValidationError("problem: m must be positive");
  if (n < 1) throw ValidationError("problem: n must be positive");
  const Field field = parse_field(root);

  const json& dj = require(root, "d", "problem");
  if (!dj.is_array() || static_cast<int>(dj.size()) != n)
    throw ValidationError("problem: d must be a list of n = " + std::to_string(n) + " integers");
  std::vector<int> dv;
  for (const json& x : dj) {
    if (!x.is_number_integer()) throw ValidationError("problem: d must contain integers");
    dv.push_back(x.get<int>());
  }
  DimVector d(m, std::move(dv));

  const json& maps = require(root, "maps", "problem");
  if (!maps.is_array() || static_cast<int>(maps.size()) != n - 1)
    throw ValidationError("problem: maps must list n - 1 = " + std::to_string(n - 1) + " maps");
  std::vector<Matrix> matrices;
  ProjectionTuple tuple{m, {}};
  bool all_projections = true;
  const auto um = static_cast<std::size_t>(m);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string where = "maps[" + std::to_string(i) + "]";
    const json& item = maps[i];
    const json& type = require(item, "type", where);
    std::vector<std::size_t> killed;
    if (type == "zero") {
      for (std::size_t k = 1; k <= um; ++k) killed.push_back(k);
    } else if (type == "projection") {
      killed = parse_indices(item, m, where);
    } else if (type == "matrix") {
      matrices.push_back(parse_entries(item, field, m, where));
      all_projections = false;
      continue;
    } else if (type != "identity") {
      throw ValidationError(where + ": type must be identity, zero, projection or matrix");
    }
    matrices.push_back(Matrix::projection(field, um, killed));
    tuple.zero_sets.push_back(std::move(killed));
  }
  RepMatrices rep = matrices.empty() ? RepMatrices(field, {m}, {}) : RepMatrices::from_maps(std::move(matrices));
  std::optional<ProjectionTuple> projections;
  if (all_projections) projections = std::move(tuple);
  return ProblemFile{std::move(d), std::move(rep), std::move(projections)};
}

std::optional<ProjectionTuple> as_projection_tuple(const RepMatrices& rep) {
  const int m = rep.dims().front();
  ProjectionTuple tuple{m, {}};
  for (int v : rep.dims())
    if (v != m) return std::nullopt;
  for (const Matrix& f : rep.maps()) {
    std::vector<std::size_t> killed;
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) {
        const mpq_class x = f.at(r, c);
        if (r != c && x != 0) return std::nullopt;
        if (r == c && x == 0) killed.push_back(r + 1);
        else if (r == c && x != 1) return std::nullopt;
      }
    tuple.zero_sets.push_back(std::move(killed));
  }
  return tuple;
}

json to_json(const Decomposition& dec) {
  json summands = json::array();
  for (const auto& [iv, k] : dec.summands())
    summands.push_back({{"interval", {iv.a, iv.b}}, {"multiplicity", k}});
  return {{"summands", summands}, {"text", dec.to_string()}, {"dims", dec.dims()}};
}

json to_json(const RankSequence& r) {
  json table = json::array();
  for (int a = 1; a <= r.n(); ++a) {
    json row = json::array();
    for (int b = a; b <= r.n(); ++b) row.push_back(r.table()(a, b));
    table.push_back(row);
  }
  return {{"m", r.m()}, {"n", r.n()}, {"map_ranks", r.map_ranks()}, {"table", table},
          {"flattened", r.table().flattened()}};
}

json to_json(const SingularInfo& info) {
  json j = {{"kind", to_string(info.kind)}};
  if (info.sing_dim) j["sing_dim"] = *info.sing_dim;
  if (info.sing_codim) j["sing_codim"] = *info.sing_codim;
  if (info.codim_lower) j["codim_lower"] = *info.codim_lower;
  if (info.codim_upper) j["codim_upper"] = *info.codim_upper;
  if (info.model) j["model"] = {{"module", to_json(info.model->module)}, {"d", info.model->d}};
  return j;
}

json to_json(const DegenerationReport& report) {
  json segments = json::array();
  for (const Segment& s : report.segments)
    segments.push_back({{"vertices", {s.first, s.last}},
                        {"d", s.d.values()},
                        {"map_ranks", s.ranks.map_ranks()}});
  json flags = {{"smooth", report.smooth},
                {"irreducible", report.irreducible},
                {"flat_in_stratum", report.flat.flat_in_stratum},
                {"flat_irr_in_stratum", report.flat.flat_irr_in_stratum},
                {"in_U_irr", report.flat.in_U_irr},
                {"well_behaved", report.well_behaved}};
  if (report.normal) flags["normal"] = {{"value", *report.normal}, {"source", "by theorem"}};
  if (report.regular_codim2)
    flags["regular_codim2"] = {{"value", *report.regular_codim2}, {"source", "by theorem"}};
  json j = {{"m", report.d.m()},
            {"n", report.d.n()},
            {"d", report.d.values()},
            {"rank_sequence", to_json(report.ranks)},
            {"stratum", report.stratum.arrows},
            {"decomposition", to_json(report.decomposition)},
            {"segments", segments},
            {"flags", flags}};
  if (report.dimension) j["dimension"] = *report.dimension;
  if (report.singular) j["singular"] = to_json(*report.singular);
  return j;
}

json to_json(const Census& census) { return {{"total", census.total}, {"singular", census.singular}}; }

json to_json(const CoordinatePoint& point) { return point.sets; }

namespace {

template <class T>
std::string list(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_table(const DegenerationReport& report) {
  std::ostringstream os;
  os << "m: " << report.d.m() << "\n";
  os << "d: " << list(report.d.values()) << "\n";
  os << "map ranks: " << list(report.ranks.map_ranks()) << "\n";
  os << "rank table: " << list(report.ranks.table().flattened()) << "\n";
  os << "stratum: " << report.stratum.to_string() << "\n";
  os << "decomposition: " << report.decomposition.to_string() << "\n";
  os << "segments: " << report.segments.size() << "\n";
  os << "smooth: " << yes_no(report.smooth) << "\n";
  os << "irreducible: " << yes_no(report.irreducible) << "\n";
  os << "flat in stratum: " << yes_no(report.flat.flat_in_stratum) << "\n";
  os << "flat irreducible in stratum: " << yes_no(report.flat.flat_irr_in_stratum) << "\n";
  os << "in U_irr: " << yes_no(report.flat.in_U_irr) << "\n";
  os << "well behaved: " << yes_no(report.well_behaved) << "\n";
  if (report.normal) os << "normal: " << yes_no(*report.normal) << " (by theorem)\n";
  if (report.regular_codim2) os << "regular in codim 2: " << yes_no(*report.regular_codim2) << " (by theorem)\n";
  if (report.dimension) os << "dimension: " << *report.dimension << "\n";
  if (report.singular) {
    const SingularInfo& s = *report.singular;
    os << "singular locus: " << to_string(s.kind);
    if (s.kind == SingularKind::exact) os << ", dim " << *s.sing_dim << ", codim " << *s.sing_codim;
    if (s.kind == SingularKind::bounded) os << ", codim in [" << *s.codim_lower << ", " << *s.codim_upper << "]";
    os << "\n";
    if (s.model) os << "singular model: Gr_" << list(s.model->d) << "(" << s.model->module.to_string() << ")\n";
  }
  return os.str();
}

}  // namespace lindeg

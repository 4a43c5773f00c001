#include "cstardyn/io/json_io.hpp"

#include <cmath>

#include "cstardyn/core/errors.hpp"

namespace cstardyn {

namespace {

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw JsonFormatError(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw JsonFormatError(where, std::string("missing member \"") + key + "\"");
  return *it;
}

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw JsonFormatError(where, "expected an integer");
  return j.get<int>();
}

std::vector<int> ints_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw JsonFormatError(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<std::vector<int>> table_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw JsonFormatError(where, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(ints_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

// Wraps domain validation errors raised while assembling parsed data.
template <class F>
auto at_path(const std::string& where, F&& build) {
  try {
    return build();
  } catch (const InvalidArgument& e) {
    throw JsonFormatError(where, e.what());
  }
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw JsonFormatError(where, "expected a number or [re, im]");
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j, const std::string& where, int rows, int cols) {
  if (!j.is_array()) throw JsonFormatError(where, "expected a matrix (array of rows)");
  const int r = static_cast<int>(j.size());
  if (rows >= 0 && r != rows)
    throw JsonFormatError(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
  if (r == 0) return CMatrix(0, cols < 0 ? 0 : cols);
  if (!j[0].is_array()) throw JsonFormatError(where + "/0", "expected a row array");
  const int c = static_cast<int>(j[0].size());
  if (cols >= 0 && c != cols)
    throw JsonFormatError(where, "expected " + std::to_string(cols) + " columns, got " + std::to_string(c));
  CMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    const std::string row_where = where + "/" + std::to_string(i);
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) throw JsonFormatError(row_where, "ragged row");
    for (int k = 0; k < c; ++k) m(i, k) = complex_from_json(j[i][k], row_where + "/" + std::to_string(k));
  }
  return m;
}

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

CVector vector_from_json(const Json& j, const std::string& where, int size) {
  if (!j.is_array()) throw JsonFormatError(where, "expected a vector");
  if (size >= 0 && static_cast<int>(j.size()) != size)
    throw JsonFormatError(where, "expected " + std::to_string(size) + " entries");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i], where + "/" + std::to_string(i));
  return v;
}

Json system_to_json(const System& system) {
  Json out;
  const FiniteGroup& group = system.group();
  if (group == cyclic_group(group.order()))
    out["group"] = {{"cyclic", group.order()}};
  else if (group.order() == 6 && group == symmetric_group(3))
    out["group"] = {{"symmetric", 3}};
  else
    out["group"] = {{"mult", group.table()}};
  out["space"] = system.n();
  out["perm"] = system.action().perm();
  return out;
}

System system_from_json(const Json& j, const std::string& where) {
  const Json& g = member(j, "group", where);
  const std::string gw = where + "/group";
  const FiniteGroup group = at_path(gw, [&] {
    if (g.is_object() && g.contains("cyclic")) return cyclic_group(int_from_json(g["cyclic"], gw + "/cyclic"));
    if (g.is_object() && g.contains("symmetric"))
      return symmetric_group(int_from_json(g["symmetric"], gw + "/symmetric"));
    return FiniteGroup(table_from_json(member(g, "mult", gw), gw + "/mult"));
  });
  const int n = int_from_json(member(j, "space", where), where + "/space");
  if (n < 1) throw JsonFormatError(where + "/space", "space must have at least one point");
  if (!j.contains("perm")) return System(GroupAction::trivial(group, n));
  const auto perm = table_from_json(j["perm"], where + "/perm");
  return at_path(where + "/perm", [&] { return System(GroupAction(group, FiniteSpace(n), perm)); });
}

Json rep_to_json(const EquivariantRep& rep) {
  const auto& module = rep.module();
  Json out;
  out["fiberDims"] = module.fiber_dims();
  Json rho = Json::array();
  for (const auto& op : rep.rho()) {
    Json blocks = Json::array();
    for (const auto& b : op.blocks()) blocks.push_back(matrix_to_json(b));
    rho.push_back(std::move(blocks));
  }
  out["rho"] = std::move(rho);
  Json v = Json::array();
  for (const auto& map : rep.v()) {
    Json blocks = Json::array();
    for (const auto& b : map.blocks) blocks.push_back(matrix_to_json(b));
    v.push_back({{"source", map.source}, {"blocks", std::move(blocks)}});
  }
  out["v"] = std::move(v);
  return out;
}

EquivariantRep rep_from_json(const System& system, const Json& j, const std::string& where) {
  const int n = system.n();
  const auto dims = ints_from_json(member(j, "fiberDims", where), where + "/fiberDims");
  if (static_cast<int>(dims.size()) != n) throw JsonFormatError(where + "/fiberDims", "need one dimension per point");
  const SectionalModule module = at_path(where + "/fiberDims", [&] { return SectionalModule(dims); });

  const Json& rho_j = member(j, "rho", where);
  if (!rho_j.is_array() || static_cast<int>(rho_j.size()) != n)
    throw JsonFormatError(where + "/rho", "need one generator per point");
  std::vector<ModuleOperator> rho;
  for (int k = 0; k < n; ++k) {
    const std::string kw = where + "/rho/" + std::to_string(k);
    if (!rho_j[k].is_array() || static_cast<int>(rho_j[k].size()) != n)
      throw JsonFormatError(kw, "need one block per point");
    std::vector<CMatrix> blocks;
    for (int x = 0; x < n; ++x)
      blocks.push_back(matrix_from_json(rho_j[k][x], kw + "/" + std::to_string(x), dims[x], dims[x]));
    rho.emplace_back(module, std::move(blocks));
  }

  const Json& v_j = member(j, "v", where);
  if (!v_j.is_array() || static_cast<int>(v_j.size()) != system.order())
    throw JsonFormatError(where + "/v", "need one map per group element");
  std::vector<FiberPermutingMap> v;
  for (int g = 0; g < system.order(); ++g) {
    const std::string gw = where + "/v/" + std::to_string(g);
    FiberPermutingMap map;
    map.source = ints_from_json(member(v_j[g], "source", gw), gw + "/source");
    if (static_cast<int>(map.source.size()) != n) throw JsonFormatError(gw + "/source", "need one source per point");
    const Json& blocks = member(v_j[g], "blocks", gw);
    if (!blocks.is_array() || static_cast<int>(blocks.size()) != n)
      throw JsonFormatError(gw + "/blocks", "need one block per point");
    for (int x = 0; x < n; ++x) {
      const int s = map.source[x];
      if (s < 0 || s >= n) throw JsonFormatError(gw + "/source/" + std::to_string(x), "point out of range");
      map.blocks.push_back(matrix_from_json(blocks[x], gw + "/blocks/" + std::to_string(x), dims[x], dims[s]));
    }
    v.push_back(std::move(map));
  }
  return at_path(where, [&] { return EquivariantRep(system, module, std::move(rho), std::move(v)); });
}

Json cocycle_to_json(const CocycleRep& c) {
  Json out;
  out["fiberDims"] = c.module().fiber_dims();
  Json u = Json::object();
  for (int g = 0; g < c.action().group().order(); ++g) {
    Json row = Json::object();
    for (int x = 0; x < c.module().base_size(); ++x) row[std::to_string(x)] = matrix_to_json(c.at(x, g));
    u[std::to_string(g)] = std::move(row);
  }
  out["u"] = std::move(u);
  return out;
}

CocycleRep cocycle_from_json(const System& system, const Json& j, const std::string& where) {
  const int n = system.n();
  const auto dims = ints_from_json(member(j, "fiberDims", where), where + "/fiberDims");
  if (static_cast<int>(dims.size()) != n) throw JsonFormatError(where + "/fiberDims", "need one dimension per point");
  const SectionalModule module = at_path(where + "/fiberDims", [&] { return SectionalModule(dims); });
  const Json& u_j = member(j, "u", where);
  std::vector<std::vector<CMatrix>> u(system.order());
  for (int g = 0; g < system.order(); ++g) {
    const std::string gw = where + "/u/" + std::to_string(g);
    const Json& row = member(u_j, std::to_string(g).c_str(), where + "/u");
    for (int x = 0; x < n; ++x) {
      const int s = system.action().act_inverse(g, x);
      u[g].push_back(matrix_from_json(member(row, std::to_string(x).c_str(), gw), gw + "/" + std::to_string(x),
                                      dims[x], dims[s]));
    }
  }
  return at_path(where, [&] { return CocycleRep(system.action(), module, std::move(u)); });
}

Json multiplier_to_json(const Multiplier& t) {
  Json out = Json::object();
  for (int g = 0; g < t.system().order(); ++g) out[std::to_string(g)] = matrix_to_json(t.at(g));
  return out;
}

Multiplier multiplier_from_json(const System& system, const Json& j, const std::string& where) {
  std::vector<CMatrix> mats;
  for (int g = 0; g < system.order(); ++g)
    mats.push_back(matrix_from_json(member(j, std::to_string(g).c_str(), where), where + "/" + std::to_string(g),
                                    system.n(), system.n()));
  if (j.size() != static_cast<std::size_t>(system.order()))
    throw JsonFormatError(where, "unexpected members besides one matrix per group element");
  return at_path(where, [&] { return Multiplier(system, std::move(mats)); });
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  return {{"passed", report.passed()}, {"checks", std::move(checks)}};
}

Json certificate_to_json(const PdCertificate& cert) {
  Json out{{"positive", cert.positive},
           {"minEigenvalue", number_or_null(cert.min_eigenvalue)},
           {"hermitianResidual", cert.hermitian_residual}};
  if (cert.witness) {
    const PdWitness& w = *cert.witness;
    Json wj = Json::object();
    if (w.x >= 0) wj["x"] = w.x;
    if (w.k >= 0) wj["k"] = w.k;
    if (!w.group_elements.empty()) {
      wj["groupElements"] = w.group_elements;
      Json as = Json::array();
      for (const auto& a : w.algebra_elements) as.push_back(vector_to_json(a));
      wj["algebraElements"] = std::move(as);
    }
    wj["eigenvalue"] = w.eigenvalue;
    wj["eigenvector"] = vector_to_json(w.eigenvector);
    out["witness"] = std::move(wj);
  }
  return out;
}

Json bounds_to_json(const NormBounds& bounds) {
  return {{"lower", bounds.lower}, {"upper", number_or_null(bounds.upper)}, {"consistent", bounds.consistent}};
}

}  // namespace cstardyn

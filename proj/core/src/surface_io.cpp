#include "mukai/surface_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mukai/dynkin.hpp"

namespace mukai {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::int64_t as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw SchemaError(field, "expected an integer");
  return j.get<std::int64_t>();
}

IntVector as_int_vector(const json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError(field, "expected an array of integers");
  IntVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], field));
  return out;
}

IntMatrix as_int_matrix(const json& j, const std::string& field, std::size_t n) {
  if (!j.is_array()) throw SchemaError(field, "expected an array of arrays of integers");
  IntMatrix out;
  for (const auto& row : j) out.push_back(as_int_vector(row, field));
  if (out.size() != n) throw SchemaError(field, "expected " + std::to_string(n) + " rows");
  for (const auto& row : out)
    if (row.size() != n) throw SchemaError(field, "expected " + std::to_string(n) + " columns");
  return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key)) throw SchemaError(where.empty() ? key : where + "." + key, "unknown field");
}

const json& required(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(key, "missing required field");
  return *it;
}

SurfaceModel ade_preset(const std::string& type) {
  const IntMatrix cartan = cartan_matrix(type);
  const std::size_t n = cartan.size();
  SurfaceModel m;
  m.rank = static_cast<int>(n);
  m.gram = cartan;
  for (auto& row : m.gram)
    for (auto& x : row) x = -x;
  m.c1.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector cls(n, 0);
    cls[i] = 1;
    m.curves.push_back({n == 1 ? "C" : "e" + std::to_string(i + 1), cls});
  }
  // H = 2 rho in simple-root coordinates: H.e_i = -2 for every curve.
  const QVector h = solve(QMatrix::from_integers(cartan), QVector(n, Rational(2)));
  IntVector hv;
  for (const auto& q : h) {
    if (q.get_den() != 1) throw Error("preset " + type + ": 2 rho is not integral");
    hv.push_back(q.get_num().get_si());
  }
  m.line_bundles["H"] = hv;
  return m;
}

}  // namespace

SurfaceModel parse_surface(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("document", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("document", "expected a JSON object");
  reject_unknown(doc, {"rank", "gram", "c1", "curves", "isometries", "line_bundles"}, "");

  SurfaceModel m;
  const std::int64_t rank = as_int(required(doc, "rank"), "rank");
  if (rank <= 0) throw SchemaError("rank", "must be positive");
  m.rank = static_cast<int>(rank);
  const auto n = static_cast<std::size_t>(rank);

  m.gram = as_int_matrix(required(doc, "gram"), "gram", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.gram[i][j] != m.gram[j][i]) throw SchemaError("gram", "matrix is not symmetric");

  m.c1 = as_int_vector(required(doc, "c1"), "c1");
  if (m.c1.size() != n) throw SchemaError("c1", "expected length " + std::to_string(n));

  const json& curves = required(doc, "curves");
  if (!curves.is_array()) throw SchemaError("curves", "expected an array");
  for (const auto& c : curves) {
    if (!c.is_object()) throw SchemaError("curves", "expected objects {name, class}");
    reject_unknown(c, {"name", "class"}, "curves");
    const json& name = required(c, "name");
    if (!name.is_string()) throw SchemaError("curves.name", "expected a string");
    CurveRecord rec{name.get<std::string>(), as_int_vector(required(c, "class"), "curves.class")};
    if (rec.cls.size() != n) throw SchemaError("curves.class", "expected length " + std::to_string(n));
    m.curves.push_back(std::move(rec));
  }

  const json& isos = required(doc, "isometries");
  if (!isos.is_object()) throw SchemaError("isometries", "expected an object name -> matrix");
  for (const auto& [name, mat] : isos.items())
    m.isometries[name] = as_int_matrix(mat, "isometries." + name, n);

  const json& bundles = required(doc, "line_bundles");
  if (!bundles.is_object()) throw SchemaError("line_bundles", "expected an object name -> vector");
  for (const auto& [name, v] : bundles.items()) {
    m.line_bundles[name] = as_int_vector(v, "line_bundles." + name);
    if (m.line_bundles[name].size() != n)
      throw SchemaError("line_bundles." + name, "expected length " + std::to_string(n));
  }
  return m;
}

SurfaceModel load_surface_text(std::string_view json_text) {
  SurfaceModel m = parse_surface(json_text);
  ValidationReport report = validate_surface(m);
  if (!report.ok()) throw ValidationFailed(std::move(report));
  return m;
}

SurfaceModel load_surface(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open surface file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_surface_text(buf.str());
}

std::string surface_to_json(const SurfaceModel& model) {
  ordered_json doc;
  doc["rank"] = model.rank;
  doc["gram"] = model.gram;
  doc["c1"] = model.c1;
  doc["curves"] = ordered_json::array();
  for (const auto& c : model.curves) {
    ordered_json rec;
    rec["name"] = c.name;
    rec["class"] = c.cls;
    doc["curves"].push_back(rec);
  }
  doc["isometries"] = ordered_json::object();
  for (const auto& [name, m] : model.isometries) doc["isometries"][name] = m;
  doc["line_bundles"] = ordered_json::object();
  for (const auto& [name, v] : model.line_bundles) doc["line_bundles"][name] = v;
  return doc.dump(2) + "\n";
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"A1", "A2", "A3", "D4", "E6", "E7", "E8", "A1xA1", "Pell"};
  return names;
}

SurfaceModel preset(std::string_view name) {
  if (name == "Pell") {
    SurfaceModel m;
    m.rank = 2;
    m.gram = {{2, 0}, {0, -4}};
    m.c1 = {0, 0};
    m.isometries["M"] = {{3, 4}, {2, 3}};
    m.line_bundles["B"] = {1, 1};
    return m;
  }
  if (name == "A1xA1") {
    SurfaceModel m;
    m.rank = 2;
    m.gram = {{-2, 0}, {0, -2}};
    m.c1 = {0, 0};
    m.curves = {{"e1", {1, 0}}, {"e2", {0, 1}}};
    m.line_bundles["H"] = {1, 1};
    return m;
  }
  for (const auto& n : preset_names())
    if (n == name) return ade_preset(n);
  throw UnknownName("preset", std::string(name));
}

}  // namespace mukai

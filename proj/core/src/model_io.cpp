#include "smp/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "smp/errors.hpp"

namespace smp::model_io {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& text, std::size_t byte,
                             const std::string& what) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw FormatError("model file parse error at line " + std::to_string(line) +
                        ", column " + std::to_string(col) + ": " + what,
                    line);
}

void reject_unknown_keys(const ordered_json& obj,
                         std::initializer_list<const char*> allowed,
                         const char* where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok)
      throw FormatError(std::string("unknown key '") + key + "' in " + where);
  }
}

Matrix parse_matrix(const ordered_json& j, const char* name) {
  if (!j.is_array() || j.empty())
    throw FormatError(std::string(name) + " must be a non-empty array of rows");
  std::vector<Vector> rows;
  for (const auto& jrow : j) {
    if (!jrow.is_array() || jrow.empty())
      throw FormatError(std::string(name) + " rows must be non-empty arrays");
    Vector row;
    for (const auto& v : jrow) {
      if (!v.is_number())
        throw FormatError(std::string(name) + " entries must be numbers");
      row.push_back(v.get<double>());
    }
    rows.push_back(std::move(row));
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw FormatError(std::string(name) + " has ragged rows");
  return Matrix::from_rows(rows);
}

double param(const ordered_json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number())
    throw FormatError(std::string("distribution params missing numeric '") +
                      key + "'");
  return params[key].get<double>();
}

SojournDist parse_dist(const ordered_json& j) {
  reject_unknown_keys(j, {"family", "params"}, "distribution cell");
  if (!j.contains("family") || !j["family"].is_string() ||
      !j.contains("params") || !j["params"].is_object())
    throw FormatError(
        "distribution cell must be {\"family\": string, \"params\": object}");
  const std::string family = j["family"].get<std::string>();
  const ordered_json& p = j["params"];
  SojournDist d;
  if (family == "deterministic") {
    reject_unknown_keys(p, {"value"}, "deterministic params");
    d = Deterministic{param(p, "value")};
  } else if (family == "exponential") {
    reject_unknown_keys(p, {"rate"}, "exponential params");
    d = Exponential{param(p, "rate")};
  } else if (family == "uniform") {
    reject_unknown_keys(p, {"a", "b"}, "uniform params");
    d = Uniform{param(p, "a"), param(p, "b")};
  } else if (family == "gamma") {
    reject_unknown_keys(p, {"shape", "scale"}, "gamma params");
    d = GammaDist{param(p, "shape"), param(p, "scale")};
  } else if (family == "lognormal") {
    reject_unknown_keys(p, {"mu", "sigma"}, "lognormal params");
    d = Lognormal{param(p, "mu"), param(p, "sigma")};
  } else {
    throw FormatError("unknown distribution family '" + family + "'");
  }
  validate_params(d);
  return d;
}

}  // namespace

SmpModel read(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    parse_fail(text, err.byte, err.what());
  }
  if (!root.is_object()) throw FormatError("model file must be a JSON object");
  reject_unknown_keys(root, {"states", "p", "moments", "distributions"},
                      "model file");
  if (!root.contains("states") || !root["states"].is_array())
    throw FormatError("model file requires 'states': array of strings");
  if (!root.contains("p")) throw FormatError("model file requires 'p'");
  const bool has_moments = root.contains("moments");
  const bool has_dists = root.contains("distributions");
  if (has_moments == has_dists)
    throw FormatError(
        "model file requires exactly one of 'moments' or 'distributions'");

  SmpModel model{{}, parse_matrix(root["p"], "p"), MomentMatrixSet{}};
  for (const auto& s : root["states"]) {
    if (!s.is_string())
      throw FormatError("'states' entries must be strings");
    model.state_names.push_back(s.get<std::string>());
  }
  const std::size_t m = model.p.rows();

  if (has_moments) {
    const auto& jm = root["moments"];
    if (!jm.is_object())
      throw FormatError("'moments' must be an object with key 'orders'");
    reject_unknown_keys(jm, {"orders"}, "'moments'");
    if (!jm.contains("orders") || !jm["orders"].is_array() ||
        jm["orders"].empty())
      throw FormatError("'moments.orders' must be a non-empty array");
    MomentMatrixSet set;
    int r = 0;
    for (const auto& jmat : jm["orders"]) {
      ++r;
      set.orders.push_back(
          parse_matrix(jmat, ("moments.orders[" + std::to_string(r - 1) + "]")
                                 .c_str()));
    }
    model.sojourn = std::move(set);
  } else {
    const auto& jd = root["distributions"];
    if (!jd.is_array() || jd.size() != m)
      throw FormatError("'distributions' must be an m x m array");
    DistributionMatrix d(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (!jd[i].is_array() || jd[i].size() != m)
        throw FormatError("'distributions' must be an m x m array");
      for (std::size_t j = 0; j < m; ++j) {
        const auto& cell = jd[i][j];
        if (cell.is_null()) continue;
        d.at(i, j) = parse_dist(cell);
      }
    }
    model.sojourn = std::move(d);
  }
  return model;
}

SmpModel read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open model file: " + path);
  return read(in);
}

namespace {

ordered_json matrix_json(const Matrix& a) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json dist_json(const SojournDist& d) {
  ordered_json out;
  out["family"] = family_name(d);
  ordered_json params;
  std::visit(
      [&params](const auto& dist) {
        using T = std::decay_t<decltype(dist)>;
        if constexpr (std::is_same_v<T, Deterministic>) {
          params["value"] = dist.value;
        } else if constexpr (std::is_same_v<T, Exponential>) {
          params["rate"] = dist.rate;
        } else if constexpr (std::is_same_v<T, Uniform>) {
          params["a"] = dist.lo;
          params["b"] = dist.hi;
        } else if constexpr (std::is_same_v<T, GammaDist>) {
          params["shape"] = dist.shape;
          params["scale"] = dist.scale;
        } else {
          params["mu"] = dist.mu;
          params["sigma"] = dist.sigma;
        }
      },
      d);
  out["params"] = std::move(params);
  return out;
}

}  // namespace

std::string write(const SmpModel& model) {
  ordered_json root;
  root["states"] = model.state_names;
  root["p"] = matrix_json(model.p);
  if (model.has_distributions()) {
    const auto& d = model.distribution_matrix();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < d.m; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < d.m; ++j) {
        if (d.at(i, j))
          row.push_back(dist_json(*d.at(i, j)));
        else
          row.push_back(nullptr);
      }
      rows.push_back(std::move(row));
    }
    root["distributions"] = std::move(rows);
  } else {
    ordered_json orders = ordered_json::array();
    for (const Matrix& er : model.moment_set().orders)
      orders.push_back(matrix_json(er));
    root["moments"] = ordered_json{{"orders", std::move(orders)}};
  }
  return root.dump(2) + "\n";
}

void write_file(const std::string& path, const SmpModel& model) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open model file for writing: " + path);
  out << write(model);
}

}  // namespace smp::model_io

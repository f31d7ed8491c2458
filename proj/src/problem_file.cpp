#include "hardy/problem_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hardy {

using Json = nlohmann::ordered_json;

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::generic: return "generic";
    case ProblemKind::coremap: return "coremap";
    case ProblemKind::metric: return "metric";
  }
  return "generic";
}

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ProblemFileError(key, "missing");
  return doc.at(key);
}

Rational read_rational(const Json& node, const std::string& path) {
  std::string text;
  if (node.is_string()) {
    text = node.get<std::string>();
  } else if (node.is_number_integer()) {
    text = node.dump();
  } else {
    throw ProblemFileError(path, "expected a rational string such as \"3/4\"");
  }
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw ProblemFileError(path, "malformed rational '" + text + "' (" + e.what() + ")");
  }
}

std::vector<Rational> read_weights(const Json& node, const std::string& path, std::size_t n) {
  if (!node.is_array()) throw ProblemFileError(path, "expected an array");
  if (node.size() != n) {
    throw ProblemFileError(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(node.size()));
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    Rational r = read_rational(node[i], at(path, i));
    if (sgn(r) < 0) throw ProblemFileError(at(path, i), "weight must be non-negative");
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::vector<Rational>> optional_weights(const Json& doc, const std::string& key, std::size_t n) {
  if (!doc.contains(key)) return std::nullopt;
  return read_weights(doc.at(key), key, n);
}

std::size_t read_index(const Json& node, const std::string& path, std::size_t bound) {
  if (!node.is_number_unsigned()) throw ProblemFileError(path, "expected a non-negative integer index");
  const auto value = node.get<std::size_t>();
  if (value >= bound) throw ProblemFileError(path, "index " + std::to_string(value) + " out of range");
  return value;
}

std::vector<PointSet> read_core(const Json& doc, std::size_t n) {
  const Json& node = require(doc, "core");
  if (!node.is_array()) throw ProblemFileError("core", "expected an array of index lists");
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_array()) throw ProblemFileError(at("core", i), "expected an index list");
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < node[i].size(); ++j) {
      members.push_back(read_index(node[i][j], at(at("core", i), j), n));
    }
    PointSet set = make_point_set(members);
    if (set.size() != members.size()) throw ProblemFileError(at("core", i), "duplicate index");
    out.push_back(std::move(set));
  }
  try {
    OrderedCore(n, out);
  } catch (const std::invalid_argument& e) {
    throw ProblemFileError("core", e.what());
  }
  return out;
}

void check_exclusive(const Json& doc, const char* a, const char* b) {
  if (doc.contains(a) && doc.contains(b)) {
    throw ProblemFileError(b, std::string("give either '") + a + "' or '" + b + "', not both");
  }
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ProblemFileError("", std::string("JSON syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw ProblemFileError("", "top level must be an object");

  ProblemFile file;
  const Json& kind = require(doc, "kind");
  const std::string kindName = kind.is_string() ? kind.get<std::string>() : "";
  if (kindName == "generic") {
    file.kind = ProblemKind::generic;
  } else if (kindName == "coremap") {
    file.kind = ProblemKind::coremap;
  } else if (kindName == "metric") {
    file.kind = ProblemKind::metric;
  } else {
    throw ProblemFileError("kind", "expected one of generic, coremap, metric");
  }

  const Json& points = require(doc, "points");
  if (!points.is_array()) throw ProblemFileError("points", "expected an array of labels");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].is_string()) throw ProblemFileError(at("points", i), "label must be a string");
    file.points.push_back(points[i].get<std::string>());
  }
  const std::size_t n = file.points.size();
  if (n == 0) throw ProblemFileError("points", "at least one point is required");
  file.mu = read_weights(require(doc, "mu"), "mu", n);
  try {
    MeasureSpace(file.points, file.mu);
  } catch (const std::invalid_argument& e) {
    throw ProblemFileError("points", e.what());
  }
  file.p = read_rational(require(doc, "p"), "p");
  file.q = read_rational(require(doc, "q"), "q");
  if (file.p < 1) throw ProblemFileError("p", "must be at least 1");
  if (sgn(file.q) <= 0) throw ProblemFileError("q", "must be positive");
  file.f = optional_weights(doc, "f", n);

  switch (file.kind) {
    case ProblemKind::generic: {
      file.core = read_core(doc, n);
      file.omega = optional_weights(doc, "omega", n);
      file.v = optional_weights(doc, "v", n);
      file.tau = optional_weights(doc, "tau", n);
      file.eta = optional_weights(doc, "eta", n);
      file.u = optional_weights(doc, "u", n);
      const bool twoWeight = file.omega || file.v;
      if (twoWeight) {
        if (!file.omega) throw ProblemFileError("omega", "missing (v is present)");
        if (!file.v) throw ProblemFileError("v", "missing (omega is present)");
        if (file.tau || file.eta || file.u) {
          throw ProblemFileError("tau", "omega/v files cannot also give tau, eta or u");
        }
      } else {
        if (!file.tau) throw ProblemFileError("tau", "missing (give omega and v, or tau with eta or u)");
        check_exclusive(doc, "eta", "u");
        if (!file.eta && !file.u) throw ProblemFileError("eta", "missing (or give u)");
      }
      break;
    }
    case ProblemKind::coremap: {
      file.core = read_core(doc, n);
      const Json& items = require(doc, "coremap");
      if (!items.is_array()) throw ProblemFileError("coremap", "expected an array of items");
      for (std::size_t i = 0; i < items.size(); ++i) {
        const std::string path = at("coremap", i);
        const Json& item = items[i];
        if (!item.is_object()) throw ProblemFileError(path, "expected an object");
        CoreMapItem entry;
        if (item.contains("label")) {
          if (!item["label"].is_string()) throw ProblemFileError(join(path, "label"), "must be a string");
          entry.label = item["label"].get<std::string>();
        } else {
          entry.label = "y" + std::to_string(i);
        }
        if (!item.contains("tau")) throw ProblemFileError(join(path, "tau"), "missing");
        entry.tau = read_rational(item["tau"], join(path, "tau"));
        if (sgn(entry.tau) < 0) throw ProblemFileError(join(path, "tau"), "weight must be non-negative");
        if (!item.contains("ball")) throw ProblemFileError(join(path, "ball"), "missing (use null for the empty ball)");
        if (!item["ball"].is_null()) entry.ball = read_index(item["ball"], join(path, "ball"), file.core.size());
        file.coremap.push_back(std::move(entry));
      }
      check_exclusive(doc, "eta", "u");
      file.eta = optional_weights(doc, "eta", n);
      file.u = optional_weights(doc, "u", n);
      if (!file.eta && !file.u) throw ProblemFileError("eta", "missing (or give u)");
      break;
    }
    case ProblemKind::metric: {
      const Json& dist = require(doc, "dist");
      if (!dist.is_array() || dist.size() != n) {
        throw ProblemFileError("dist", "expected an " + std::to_string(n) + " x " + std::to_string(n) + " matrix");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!dist[i].is_array() || dist[i].size() != n) {
          throw ProblemFileError(at("dist", i), "expected " + std::to_string(n) + " entries");
        }
        std::vector<Rational> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(read_rational(dist[i][j], at(at("dist", i), j)));
        file.dist.push_back(std::move(row));
      }
      file.anchor = read_index(require(doc, "anchor"), "anchor", n);
      if (doc.contains("strict")) {
        if (!doc["strict"].is_boolean()) throw ProblemFileError("strict", "expected true or false");
        file.strict = doc["strict"].get<bool>();
      }
      file.omega = read_weights(require(doc, "omega"), "omega", n);
      file.v = read_weights(require(doc, "v"), "v", n);
      try {
        make_metric(file);
      } catch (const std::invalid_argument& e) {
        throw ProblemFileError("dist", e.what());
      }
      break;
    }
  }
  if (file.kind != ProblemKind::metric) {
    try {
      make_hardy_problem(file);
    } catch (const std::invalid_argument& e) {
      throw ProblemFileError(file.kind == ProblemKind::coremap ? "coremap" : "core", e.what());
    }
  }
  return file;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProblemFileError("", "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem(text.str());
}

namespace {

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& r : values) out.push_back(to_string(r));
  return out;
}

}  // namespace

std::string serialize_problem(const ProblemFile& file) {
  Json doc;
  doc["kind"] = to_string(file.kind);
  doc["points"] = file.points;
  doc["mu"] = rationals(file.mu);
  doc["p"] = to_string(file.p);
  doc["q"] = to_string(file.q);
  if (file.kind != ProblemKind::metric) doc["core"] = file.core;
  if (file.kind == ProblemKind::coremap) {
    Json items = Json::array();
    for (const auto& item : file.coremap) {
      Json entry;
      entry["label"] = item.label;
      entry["tau"] = to_string(item.tau);
      entry["ball"] = item.ball ? Json(*item.ball) : Json(nullptr);
      items.push_back(std::move(entry));
    }
    doc["coremap"] = std::move(items);
  }
  if (file.kind == ProblemKind::metric) {
    Json dist = Json::array();
    for (const auto& row : file.dist) dist.push_back(rationals(row));
    doc["dist"] = std::move(dist);
    doc["anchor"] = file.anchor;
    doc["strict"] = file.strict;
  }
  const std::pair<const char*, const std::optional<std::vector<Rational>>*> optionals[] = {
      {"omega", &file.omega}, {"v", &file.v}, {"tau", &file.tau},
      {"eta", &file.eta},     {"u", &file.u}, {"f", &file.f}};
  for (const auto& [key, values] : optionals) {
    if (*values) doc[key] = rationals(**values);
  }
  return doc.dump(2) + "\n";
}

MeasureSpace make_space(const ProblemFile& file) { return MeasureSpace(file.points, file.mu); }

MetricSpace make_metric(const ProblemFile& file) {
  if (file.kind != ProblemKind::metric) throw std::invalid_argument("not a metric problem");
  return MetricSpace(file.dist, file.anchor, make_space(file), file.strict);
}

OrderedCore make_core(const ProblemFile& file) {
  if (file.kind == ProblemKind::metric) return ball_core(make_metric(file));
  return OrderedCore(file.points.size(), file.core);
}

std::vector<Rational> make_eta(const ProblemFile& file) {
  if (file.eta) return *file.eta;
  if (file.u) {
    std::vector<Rational> eta(file.mu.size());
    for (std::size_t s = 0; s < eta.size(); ++s) eta[s] = (*file.u)[s] * file.mu[s];
    return eta;
  }
  if (file.v) {
    std::vector<Rational> eta(file.mu.size());
    for (std::size_t s = 0; s < eta.size(); ++s) eta[s] = (*file.v)[s] * file.mu[s];
    return eta;
  }
  throw std::invalid_argument("problem has no eta, u or v");
}

std::optional<TwoWeightProblem> make_two_weight(const ProblemFile& file) {
  if (!file.omega || !file.v) return std::nullopt;
  TwoWeightProblem problem{make_space(file), make_core(file), *file.omega, *file.v, file.p, file.q};
  problem.validate();
  return problem;
}

HardyProblem make_hardy_problem(const ProblemFile& file) {
  if (auto two = make_two_weight(file)) return to_hardy_problem(*two);
  const std::size_t n = file.points.size();
  const MeasureSpace space = make_space(file);
  if (file.kind == ProblemKind::coremap) {
    std::vector<std::string> labels;
    std::vector<Rational> tau;
    std::vector<std::optional<std::size_t>> index;
    for (const auto& item : file.coremap) {
      labels.push_back(item.label);
      tau.push_back(item.tau);
      index.push_back(item.ball);
    }
    HardyProblem problem{space, make_eta(file), CoreMap::from_indices(n, file.core, labels, tau, index),
                         file.p, file.q};
    problem.validate();
    return problem;
  }
  // generic with tau: Y = U and B(s) is the smallest core set containing s.
  const OrderedCore core = make_core(file);
  std::vector<std::optional<std::size_t>> index(n);
  for (std::size_t s = 0; s < n; ++s) index[s] = core.rank(s) - 1;
  HardyProblem problem{space, make_eta(file),
                       CoreMap::from_indices(n, file.core, file.points, *file.tau, index), file.p, file.q};
  problem.validate();
  return problem;
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace hardy

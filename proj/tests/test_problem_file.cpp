#include <doctest.h>

#include "hardy/problem_file.hpp"

using namespace hardy;

namespace {
const char* kGeneric = R"({
  "kind": "generic", "points": ["a", "b", "c"], "mu": ["1", "1/2", "0"], "p": "1", "q": "1/2",
  "core": [[0], [0, 1, 2]], "tau": ["1", "2", "3"], "u": ["4", "1", "2"]
})";
const char* kCoremap = R"({
  "kind": "coremap", "points": ["a", "b"], "mu": ["1", "1"], "p": "1", "q": "2",
  "core": [[1], [0, 1]],
  "coremap": [{"label": "y", "tau": "3/2", "ball": 0}, {"tau": "1", "ball": null}],
  "eta": ["1", "1"]
})";
const char* kMetric = R"({
  "kind": "metric", "points": ["a", "b", "c"], "mu": ["1", "1", "1"], "p": "2", "q": "2",
  "dist": [["0", "1", "2"], ["1", "0", "1"], ["2", "1", "0"]], "anchor": 0,
  "omega": ["1", "1", "1"], "v": ["1", "2", "3"]
})";

std::string error_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ProblemFileError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("round trip is the identity") {
  for (const char* text : {kGeneric, kCoremap, kMetric}) {
    const ProblemFile once = parse_problem(text);
    const std::string serialized = serialize_problem(once);
    const ProblemFile twice = parse_problem(serialized);
    CHECK(once == twice);
    CHECK(serialize_problem(twice) == serialized);
  }
}

TEST_CASE("problem files build the matching problems") {
  const HardyProblem generic = make_hardy_problem(parse_problem(kGeneric));
  CHECK(generic.eta == std::vector<Rational>{4, Rational(1, 2), 0});
  CHECK(generic.cm.ball(1) == PointSet{0, 1, 2});
  const HardyProblem cm = make_hardy_problem(parse_problem(kCoremap));
  CHECK(cm.cm.labels()[1] == "y1");
  CHECK(cm.cm.ball(1).empty());
  CHECK(cm.cm.ball(0) == PointSet{1});
  const ProblemFile metric = parse_problem(kMetric);
  CHECK(make_two_weight(metric).has_value());
  CHECK(make_core(metric).size() == 3);
}

TEST_CASE("validation errors name the field") {
  std::string bad = kGeneric;
  bad.replace(bad.find("\"1/2\""), 5, "\"1/0\"");
  CHECK(error_of(bad).find("mu[1]") != std::string::npos);
  CHECK(error_of(bad).find("1/0") != std::string::npos);

  std::string wrongKind = kGeneric;
  wrongKind.replace(wrongKind.find("generic"), 7, "weird");
  CHECK(error_of(wrongKind).find("kind") != std::string::npos);

  std::string shortTau = kGeneric;
  shortTau.replace(shortTau.find("\"tau\": [\"1\", "), 13, "\"tau\": [");
  CHECK(error_of(shortTau).find("tau") != std::string::npos);

  std::string badBall = kCoremap;
  badBall.replace(badBall.find("\"ball\": 0"), 9, "\"ball\": 7");
  CHECK(error_of(badBall).find("coremap[0].ball") != std::string::npos);

  std::string triangle = kMetric;
  triangle.replace(triangle.find("[\"2\", \"1\", \"0\"]"), 15, "[\"9\", \"1\", \"0\"]");
  CHECK_FALSE(error_of(triangle).empty());

  CHECK(error_of("{").find("JSON") != std::string::npos);
  CHECK_FALSE(error_of(R"({"kind": "generic", "points": ["a"], "mu": ["1"], "p": "1", "q": "1",
      "core": [[0]], "tau": ["1"], "eta": ["1"], "u": ["1"]})").empty());
}

TEST_CASE("digest is stable") {
  CHECK(fnv1a_digest("") == "cbf29ce484222325");
  CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
}

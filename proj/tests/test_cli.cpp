#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <numbers>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  json doc;
};

std::string data(const std::string& name) { return std::string(SCHURMZV_DATA_DIR) + "/" + name; }

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SCHURMZV_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.doc = json::parse(r.out, nullptr, false);
  return r;
}

/// Every field not ending in _numeric that holds a number must be an integer count.
void check_exact_fields(const json& j, const std::string& key = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) check_exact_fields(v, k);
  } else if (j.is_array()) {
    for (const auto& v : j) check_exact_fields(v, key);
  } else if (j.is_number_float()) {
    const bool allowed = key.ends_with("_numeric") || key == "T" || key == "tolerance";
    CHECK_MESSAGE(allowed, "float in field " << key);
  }
}

}  // namespace

TEST_CASE("jt-check on the 3-stair") {
  const RunResult r = run("jt-check -M 6 --ribbon " + data("stair.shape") + " " + data("stair13.tab"));
  REQUIRE(r.code == 0);
  CHECK(r.doc["command"] == "jt-check");
  CHECK(r.doc["result"]["equal"] == true);
  CHECK(r.doc["result"]["lhs"] == r.doc["result"]["rhs"]);
  CHECK(r.doc["result"]["lhs"].is_string());
  CHECK(r.doc["result"]["pieces"].size() == 2);
  CHECK(r.doc["diagnostics"].is_array());
  check_exact_fields(r.doc);
}

TEST_CASE("alpha") {
  const RunResult one = run("checkerboard alpha --n 2");
  REQUIRE(one.code == 0);
  CHECK(one.doc["result"]["alpha"] == "1074502");
  const RunResult range = run("checkerboard alpha --n 1..3");
  REQUIRE(range.code == 0);
  CHECK(range.doc["result"]["values"].size() == 3);
  CHECK(range.doc["result"]["values"][2]["alpha"] == "9656199193420/21");
}

TEST_CASE("eval") {
  const RunResult zero = run("eval -M 1 " + data("hook.tab"));
  REQUIRE(zero.code == 0);
  CHECK(zero.doc["result"]["value"] == "0");
  const RunResult hook = run("eval -M 3 " + data("hook.tab"));
  CHECK(hook.doc["result"]["value"] == "3/4");
  const RunResult text = run("eval -M 3 '1 1 / 1'");
  CHECK(text.doc["result"]["value"] == "3/4");
  const RunResult stdin_run = run("eval -M 3 - < " + data("hook.tab"));
  CHECK(stdin_run.doc["result"]["value"] == "3/4");
  check_exact_fields(hook.doc);
}

TEST_CASE("extrapolation uses the configured ladder") {
  const RunResult r = run("--config " + data("config.txt") + " eval -M 8 --extrapolate '. 1 / 1 2'");
  REQUIRE(r.code == 0);
  const json& ex = r.doc["result"]["extrapolation"];
  CHECK(ex["ladder"].size() == 4);
  CHECK(ex["ladder"][0]["M"] == 128);
  const double pi4 = std::pow(std::numbers::pi, 4);
  CHECK(std::abs(ex["limit_numeric"].get<double>() - pi4 / 30) < 1e-3);
}

TEST_CASE("exit codes and error documents") {
  const RunResult parse = run("eval -M 3 '1 3 / 3 1 / . 2'");
  CHECK(parse.code == 2);
  CHECK(parse.doc["error"]["kind"] == "parse");
  const RunResult pre = run("mzv --index 2,1");
  CHECK(pre.code == 3);
  CHECK(pre.doc["error"]["kind"] == "precondition");
  const RunResult cap = run("--set enumeration_cap=10 eval -M 50 " + data("square13.tab"));
  CHECK(cap.code == 4);
  CHECK(cap.doc["error"]["kind"] == "resource");
  const RunResult tol = run("mzv --index 2 --tol 1e-12");
  CHECK(tol.code == 3);
  CHECK(tol.doc["command"] == "mzv");
  CHECK(run("--set nonsense=1 mzv --index 2").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("checkerboard eval '1 1'").code == 3);
}

TEST_CASE("decompose the worked example") {
  const RunResult r = run("decompose " + data("example_host.shape") + " " + data("example_ribbon.shape"));
  REQUIRE(r.code == 0);
  const json& pieces = r.doc["result"]["pieces"];
  REQUIRE(pieces.size() == 4);
  CHECK(pieces[0]["cells"].size() == 1);
  CHECK(pieces[1]["cells"].size() == 4);
  CHECK(pieces[2]["cells"].size() == 6);
  CHECK(pieces[3]["cells"].size() == 1);
  const json& table = r.doc["result"]["subribbon_table"];
  CHECK(table[1][0] == "EMPTY");
  CHECK(table[2][0] == "UNDEFINED");
  CHECK(r.doc["result"]["ribbon"]["steps"] == "RRURRUR");
}

TEST_CASE("checkerboard eval and tessellate") {
  const RunResult sq = run("checkerboard eval " + data("square13.tab"));
  REQUIRE(sq.code == 0);
  CHECK(sq.doc["result"]["weights"] == json::array({19}));
  const auto& numeric = sq.doc["result"]["numeric"];
  CHECK(numeric[0]["value_numeric"].get<double>() == doctest::Approx(numeric[1]["value_numeric"].get<double>()));
  const RunResult col = run("checkerboard eval --strategy column " + data("square13.tab"));
  CHECK(col.doc["result"]["value"] == sq.doc["result"]["value"]);
  check_exact_fields(sq.doc);

  const RunResult tess = run("checkerboard tessellate --kind B " + data("bstairs13.tab"));
  REQUIRE(tess.code == 0);
  CHECK(tess.doc["result"]["tessellates"] == true);
  const RunResult no = run("checkerboard tessellate --kind A " + data("square13.tab"));
  CHECK(no.doc["result"]["tessellates"] == false);
}

TEST_CASE("mzv, regularize and expand") {
  const RunResult z = run("mzv --index 1,3");
  REQUIRE(z.code == 0);
  CHECK(z.doc["result"]["value_numeric"].get<double>() ==
        doctest::Approx(std::pow(std::numbers::pi, 4) / 360).epsilon(1e-12));
  const RunResult reg = run("regularize --index 2,1");
  REQUIRE(reg.code == 0);
  CHECK(reg.doc["result"]["numeric"][0]["value_numeric"].get<double>() ==
        doctest::Approx(-2 * 1.2020569031595942854).epsilon(1e-12));
  const RunResult ex = run("expand " + data("hook.tab"));
  REQUIRE(ex.code == 0);
  CHECK(ex.doc["result"]["term_count"] == 4);
  check_exact_fields(reg.doc);
}

TEST_CASE("output is deterministic") {
  const std::string args = "checkerboard eval --pretty " + data("stair13.tab");
  CHECK(run(args).out == run(args).out);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cubicdio/cli.hpp"

using namespace cubicdio;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("cubicdio_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("solve --json on instance A") {
  const auto r = run({"solve", "--p", "3*y", "--q", "y - 1", "--bound", "10", "--mode", "filtered", "--json"});
  CHECK(r.code == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 5);
  bool found = false;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    for (const char* key : {"y0", "x0", "w0", "classification", "field_disc", "r", "comment_holds"}) {
      CHECK(lines[i].contains(key));
    }
    if (lines[i]["y0"] == 0 && lines[i]["x0"] == 1 && lines[i]["w0"] == 9) found = true;
  }
  CHECK(found);
  const json& summary = lines.back();
  CHECK(summary["tested"] == 21);
  CHECK(summary["solutions"] == 4);
  CHECK(summary["rational_w_fraction"].is_null());
  CHECK(summary["hypotheses"]["mod3"] == "IdenticallyZero");
  CHECK(r.err.empty());
}

TEST_CASE("table and JSON report the same solutions") {
  const auto j = run({"solve", "--p", "3*y", "--q", "y - 1", "--bound", "30", "--mode", "exhaustive", "--json"});
  const auto t = run({"solve", "--p", "3*y", "--q", "y - 1", "--bound", "30", "--mode", "exhaustive"});
  REQUIRE(j.code == 0);
  REQUIRE(t.code == 0);
  std::set<std::pair<long, long>> from_json, from_table;
  for (const auto& line : json_lines(j.out)) {
    if (line.contains("x0")) from_json.emplace(line["y0"].get<long>(), line["x0"].get<long>());
  }
  std::istringstream in(t.out);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line) && !line.empty()) {
    std::istringstream row(line);
    long y, x;
    row >> y >> x;
    from_table.emplace(y, x);
  }
  CHECK(from_json == from_table);
  CHECK_FALSE(from_json.empty());
}

TEST_CASE("strict obstruction exits 2") {
  const auto r = run({"solve", "--p", "y^2 + 1", "--q", "y", "--bound", "100", "--strict"});
  CHECK(r.code == 2);
  CHECK(r.out.find("NowhereZero") != std::string::npos);
  CHECK(r.err.find("never divisible by 3") != std::string::npos);

  const auto j = run({"solve", "--p", "y^2 + 1", "--q", "y", "--bound", "100", "--strict", "--json"});
  CHECK(j.code == 2);
  CHECK(json::parse(j.out)["hypotheses"]["obstruction"] == true);

  // Without --strict the search runs and only warns.
  const auto lax = run({"solve", "--p", "y^2 + 1", "--q", "y", "--bound", "100", "--json"});
  CHECK(lax.code == 0);
  CHECK(json_lines(lax.out).back()["filter_pass"] == 0);
  CHECK(lax.err.find("warning") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 1") {
  CHECK(run({"solve", "--p", "3*y", "--q"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"solve", "--p", "3y", "--q", "1", "--bound", "3"}).code == 1);
  CHECK(run({"solve", "--p", "3*y", "--q", "1", "--bound", "0"}).code == 1);
  CHECK(run({"solve", "--p", "0", "--q", "0", "--bound", "3"}).code == 1);
  CHECK(run({"solve", "--p", "y", "--q", "1", "--bound", "3", "--mode", "fast"}).code == 1);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("x^3 - p(y)*x") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 3") {
  const auto r = run({"solve", "--p", "3", "--q", "10403", "--bound", "2", "--mode", "exhaustive", "--max-trial",
                      "100", "--json"});
  CHECK(r.code == 3);
  CHECK(json_lines(r.out).back()["budget_warnings"].size() == 5);
  CHECK(r.err.find("budget exceeded") != std::string::npos);
}

TEST_CASE("check and cardano subcommands") {
  const auto c = run({"check", "--p", "3*y", "--q", "y - 1", "--json"});
  CHECK(c.code == 0);
  const json j = json::parse(c.out);
  CHECK(j["discriminant"] == "-108*y^3 - 27*y^2 + 54*y - 27");
  CHECK(j["hypotheses"]["simple_root_count"] == 3);
  CHECK(run({"check", "--p", "y^2+1", "--q", "y", "--strict"}).code == 2);

  const auto k = run({"cardano", "--p0", "0", "--q0", "-8", "--json"});
  CHECK(k.code == 0);
  CHECK(json::parse(k.out)["root"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  const auto bad = run({"cardano", "--p0", "-3", "--q0", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("CasusIrreducibilis") != std::string::npos);
}

TEST_CASE("batch") {
  const auto two = write_temp("two.json", R"([
    {"name": "A", "p": "3*y", "q": "y - 1", "bound": 10},
    {"name": "obstructed", "p": "y^2 + 1", "q": "y", "mode": "filtered"}
  ])");
  const auto r = run({"batch", "--file", two.string(), "--bound", "50", "--json"});
  CHECK(r.code == 0);
  const auto lines = json_lines(r.out);
  int summaries = 0;
  for (const auto& l : lines) {
    if (l.contains("instance")) ++summaries;
  }
  CHECK(summaries == 2);
  CHECK(lines.back()["batch"]["instances"] == 2);
  CHECK(lines.back()["batch"]["obstructions"] == 1);
  CHECK(lines.back()["batch"]["solutions"] == 4);

  // Worst per-instance exit code wins.
  CHECK(run({"batch", "--file", two.string(), "--bound", "50", "--strict"}).code == 2);

  const auto empty = write_temp("empty.json", "[]");
  const auto e = run({"batch", "--file", empty.string(), "--json"});
  CHECK(e.code == 0);
  CHECK(json::parse(e.out)["batch"]["instances"] == 0);

  const auto dup = write_temp("dup.json", R"([{"name":"a","p":"y","q":"1","bound":2},{"name":"a","p":"y","q":"2","bound":2}])");
  const auto d = run({"batch", "--file", dup.string()});
  CHECK(d.code == 1);
  CHECK(d.err.find("duplicate instance name \"a\"") != std::string::npos);

  const auto bad = write_temp("bad.json", R"([{"name":"a","p":"y","q":"1"},{"name":"b","p":"y^","q":"1"}])");
  const auto b = run({"batch", "--file", bad.string(), "--bound", "3"});
  CHECK(b.code == 1);
  CHECK(b.err.find("record 1") != std::string::npos);

  const auto nobound = write_temp("nobound.json", R"([{"name":"a","p":"y","q":"1"}])");
  CHECK(run({"batch", "--file", nobound.string()}).code == 1);
  CHECK(run({"batch", "--file", "/nonexistent/instances.json"}).code == 1);

  for (const auto& p : {two, empty, dup, bad, nobound}) std::filesystem::remove(p);
}

TEST_CASE("load_instances") {
  const auto inst = cli::load_instances(R"([{"name":"x","p":"3*y","q":"y-1","bound":5,"mode":"exhaustive"}])");
  REQUIRE(inst.size() == 1);
  CHECK(inst[0].p == Poly{0, 3});
  CHECK(inst[0].bound == 5);
  CHECK(inst[0].mode == SearchMode::Exhaustive);
  CHECK_THROWS_AS(cli::load_instances("{}"), cli::InstanceFileError);
  CHECK_THROWS_AS(cli::load_instances("[1]"), cli::InstanceFileError);
  CHECK_THROWS_AS(cli::load_instances(R"([{"name":"x","p":"y","q":"1","bound":0}])"), cli::InstanceFileError);
}

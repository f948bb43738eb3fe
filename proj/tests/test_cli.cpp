#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "supchar/cli.hpp"

using namespace supchar;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("supchar_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_group_spec("cyclic:13").a == 13);
  CHECK(parse_group_spec("dihedral:19").kind == GroupSpec::Kind::dihedral);
  const auto f = parse_group_spec("frobenius:7:3");
  CHECK((f.a == 7 && f.b == 3));
  CHECK(parse_group_spec("file:/tmp/x.json").path == "/tmp/x.json");
  CHECK(parse_group_spec("frobenius:7:3").to_string() == "frobenius:7:3");
  CHECK_THROWS_AS(parse_group_spec("cyclic"), ArgumentError);
  CHECK_THROWS_AS(parse_group_spec("cyclic:x"), ArgumentError);
  CHECK_THROWS_AS(parse_group_spec("klein:4"), ArgumentError);
  CHECK_THROWS_AS(parse_group_spec("frobenius:7"), ArgumentError);
}

TEST_CASE("count") {
  auto r = run({"count", "--group", "cyclic:13", "--mode", "main"});
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  r = run({"count", "--group", "dihedral:13", "--mode", "both"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");
}

TEST_CASE("list json round trip") {
  const auto r = run({"list", "--group", "cyclic:7", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["theories"].size() == 4);
  const auto t = cyclic_table(7);
  const auto theories = theories_from_json(t, doc);
  for (const auto& th : theories) CHECK(verify_theory(t, th));
  bool cubes = false, pairs = false;
  for (const auto& item : doc["theories"]) {
    if (item["x_partition"] == nlohmann::json::parse("[[1],[2,3,5],[4,6,7]]")) cubes = item["k_partition"] == item["x_partition"];
    if (item["x_partition"] == nlohmann::json::parse("[[1],[2,7],[3,6],[4,5]]")) pairs = item["k_partition"] == item["x_partition"];
  }
  CHECK(cubes);
  CHECK(pairs);
  // text output lists the same theories
  const auto text = run({"list", "--group", "cyclic:7", "--format", "text"});
  for (const auto& th : theories) CHECK(text.out.find(partition_to_string(th.x_parts)) != std::string::npos);
}

TEST_CASE("list with both modes") {
  const auto r = run({"list", "--group", "dihedral:7", "--mode", "both"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["mode"] == "both");
  CHECK(doc.contains("stats_first"));
}

TEST_CASE("threads give identical output") {
  const auto a = run({"list", "--group", "cyclic:13", "--threads", "1"});
  const auto b = run({"list", "--group", "cyclic:13", "--threads", "8"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("badparts") {
  auto r = run({"badparts", "--group", "cyclic:11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bad_parts: 990") != std::string::npos);
  r = run({"badparts", "--group", "dihedral:17", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["bad_part_count"] == 480);
  r = run({"badparts", "--group", "cyclic:2", "--masks", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["bad_part_count"] == 1);
  CHECK(doc["alpha"] == "1");
  CHECK(doc["bad_parts"] == nlohmann::json::parse("[[2]]"));
  r = run({"badparts", "--group", "cyclic:13"});
  CHECK(r.out.find("4020/4095") == std::string::npos);  // printed in lowest terms
  CHECK(r.out.find("268/273 (98.16%)") != std::string::npos);
}

TEST_CASE("validate") {
  const auto good = temp_file("good.json", serialize_table(cyclic_table(5)));
  auto r = run({"validate", "--group", "file:" + good});
  CHECK(r.code == 0);
  CHECK(r.out == "OK\n");

  auto doc = nlohmann::json::parse(serialize_table(cyclic_table(5)));
  doc["order"] = 7;
  const auto bad = temp_file("bad.json", doc.dump());
  r = run({"validate", "--group", "file:" + bad});
  CHECK(r.code == kExitInvalidTable);
  CHECK(r.out.find("class sizes sum") != std::string::npos);
  r = run({"count", "--group", "file:" + bad});
  CHECK(r.code == kExitInvalidTable);
  CHECK(r.err.find("class sizes sum") != std::string::npos);

  doc = nlohmann::json::parse(serialize_table(cyclic_table(5)));
  doc["num_classes"] = 65;
  r = run({"validate", "--group", "file:" + temp_file("big.json", doc.dump())});
  CHECK(r.code == kExitSize);

  r = run({"count", "--group", "file:" + temp_file("garbage.json", "{not json")});
  CHECK(r.code == kExitInvalidTable);
}

TEST_CASE("exit codes") {
  CHECK(run({"count", "--group", "file:/nonexistent/x.json"}).code == kExitIo);
  CHECK(run({"count", "--group", "cyclic:65"}).code == kExitSize);
  CHECK(run({"count", "--group", "nope:1"}).code == kExitArguments);
  CHECK(run({"count"}).code == kExitArguments);
  CHECK(run({"count", "--group", "cyclic:5", "--mode", "fast"}).code == kExitArguments);
  CHECK(run({"frobnicate"}).code == kExitArguments);
  CHECK(run({"list", "--group", "cyclic:5", "--output", "/nonexistent/dir/out.json"}).code == kExitIo);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table and output file") {
  const auto path = (std::filesystem::temp_directory_path() / "supchar_test_table.json").string();
  CHECK(run({"table", "--group", "frobenius:7:3", "--output", path}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == serialize_table(frobenius_pq_table(7, 3)));
  CHECK(run({"count", "--group", "file:" + path}).out == "5\n");
}

TEST_CASE("bench") {
  const auto report = run_bench({parse_group_spec("cyclic:11"), parse_group_spec("dihedral:2")},
                                {SearchMode::main, SearchMode::first}, 1);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].sup == 4);
  CHECK(report.rows[0].bad_parts == 990u);
  CHECK(report.rows[0].alpha_percent == "96.77");
  CHECK(report.rows[0].first_kappa_calls == 115975u);
  CHECK(report.rows[1].bad_parts == 0u);
  const auto csv = report.to_csv();
  CHECK(csv.rfind("kappa,group,sup,bad_parts,alpha_percent,ma_seconds,fa_seconds,fa_ma,ma_kappa_calls,fa_kappa_calls\n", 0) == 0);
  CHECK(csv.find("\n11,Z11,4,990,96.77,") != std::string::npos);
  auto r = run({"bench", "--group", "cyclic:7", "--group", "dihedral:5", "--repeats", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  CHECK(run({"bench", "--group", "cyclic:7", "--repeats", "0"}).code == kExitArguments);
}

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "froblab/cli.hpp"
#include "froblab/io.hpp"

using namespace froblab;
namespace fs = std::filesystem;

namespace {

const std::string kData = FROBLAB_SOURCE_DIR "/data/";
const std::string kFixtures = FROBLAB_SOURCE_DIR "/tests/fixtures/";

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "froblab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() /
                   ("froblab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string write_module(const fs::path& dir, const std::string& name, const Json& j) {
  const auto path = (dir / name).string();
  write_file_atomic(path, dump_json(j));
  return path;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Analyze, NaturalModule) {
  const auto r = run({"analyze", kData + "natural_f2t2.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hsl_exponent: 1"), std::string::npos);
  EXPECT_NE(r.out.find("torsion_free: false"), std::string::npos);
  EXPECT_NE(r.out.find("(zero)"), std::string::npos);

  const auto s = run({"analyze", kData + "natural_f2t2.json", "--format", "structured"});
  const auto j = Json::parse(s.out);
  EXPECT_EQ(j["hsl_exponent"], 1);
  EXPECT_EQ(j["torsion_free"], false);
  EXPECT_EQ(j["grann"]["chain"], Json::parse("[[]]"));
}

TEST(Analyze, ZeroAndInvertibleModules) {
  const auto dir = scratch_dir();
  const auto zero = write_module(dir, "zero.json",
                                 Json::parse(R"({"side": "left", "dim": 0, "algebra": "F4", "action": [[], []], "X": []})"));
  const auto z = Json::parse(run({"analyze", zero, "--format", "structured"}).out);
  EXPECT_EQ(z["dim"], 0);
  EXPECT_EQ(z["hsl_exponent"], 0);
  EXPECT_EQ(z["torsion_free"], true);
  EXPECT_EQ(z["grann"]["chain"], Json::parse(R"([["1", "u"]])"));

  const auto inv = write_module(dir, "inv.json",
                                Json::parse(R"({"side": "right", "dim": 2, "algebra": "F5", "action": [[[1, 0], [0, 1]]],
                                                "X": [[0, 1], [1, 0]]})"));
  const auto m = Json::parse(run({"analyze", inv, "--format", "structured"}).out);
  EXPECT_EQ(m["divisibility_exponent"], 0);
  EXPECT_EQ(m["divisible"], true);
  fs::remove_all(dir);
}

TEST(Dualize, SideFlipAndRoundTrip) {
  const auto dir = scratch_dir();
  const auto once = (dir / "d.json").string(), twice = (dir / "dd.json").string();
  const auto r = run({"dualize", kData + "natural_f2t2.json", "--out", once, "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["input_side"], "left");
  EXPECT_EQ(j["output_side"], "right");
  EXPECT_EQ(j["round_trip_verified"], true);
  ASSERT_EQ(run({"dualize", once, "--out", twice}).code, 0);
  const auto original = std::get<LeftFModule>(module_from_json(read_json_file(kData + "natural_f2t2.json"), {}).module);
  const auto back = std::get<LeftFModule>(module_from_json(read_json_file(twice), {}).module);
  EXPECT_TRUE(find_isomorphism(original, back).has_value());
  fs::remove_all(dir);
}

TEST(Dualize, EveryCatalogModuleRoundTrips) {
  const auto dir = scratch_dir();
  const auto raw = read_json_file(kData + "default_catalog.json");
  const auto cat = catalog_from_json(raw);
  for (const auto& nm : cat.modules) {
    auto j = raw["modules"][nm.name];
    const std::string alg = j["algebra"];
    j["algebra"] = raw["algebras"][alg];
    const auto in = write_module(dir, "in.json", j);
    const auto out1 = (dir / "out1.json").string(), out2 = (dir / "out2.json").string();
    ASSERT_EQ(run({"dualize", in, "--out", out1}).code, 0) << nm.name;
    ASSERT_EQ(run({"dualize", out1, "--out", out2}).code, 0) << nm.name;
    const auto a = module_from_json(j, {}), b = module_from_json(read_json_file(out2), {});
    ASSERT_EQ(a.module.index(), b.module.index());
    std::visit(
        [&](const auto& m) {
          using M = std::decay_t<decltype(m)>;
          EXPECT_TRUE(find_isomorphism(m, std::get<M>(b.module)).has_value()) << nm.name;
        },
        a.module);
  }
  fs::remove_all(dir);
}

TEST(Dualize, ZeroModule) {
  const auto dir = scratch_dir();
  const auto zero = write_module(dir, "zero.json",
                                 Json::parse(R"({"side": "right", "dim": 0, "algebra": "F9", "action": [[], []], "X": []})"));
  const auto out = (dir / "d.json").string();
  ASSERT_EQ(run({"dualize", zero, "--out", out}).code, 0);
  const auto d = read_json_file(out);
  EXPECT_EQ(d["side"], "left");
  EXPECT_EQ(d["dim"], 0);
  fs::remove_all(dir);
}

TEST(FClosure, Examples) {
  const auto r = Json::parse(run({"fclosure", kData + "f2_t3.json", "--gen", "0,0,1", "--format", "structured"}).out);
  EXPECT_EQ(r["Q"], 4);
  EXPECT_EQ(r["closure"], Json::parse(R"(["t", "t^2"])"));
  const auto unit = Json::parse(run({"fclosure", kData + "f2_t3.json", "--gen", "1,0,0", "--format", "structured"}).out);
  EXPECT_EQ(unit["Q"], 1);
  const auto zero = Json::parse(run({"fclosure", "F9", "--format", "structured"}).out);
  EXPECT_EQ(zero["closure"], Json::array());
  EXPECT_EQ(zero["Q"], 1);
}

TEST(FClosure, BadInput) {
  EXPECT_EQ(run({"fclosure", kData + "f2_t3.json", "--gen", "0,1"}).code, 2);
  EXPECT_EQ(run({"fclosure", kData + "f2_t3.json", "--gen", "0,1,2"}).code, 2);
  EXPECT_EQ(run({"fclosure", kFixtures + "noncommutative_algebra.json"}).code, 2);
}

TEST(Check, DefaultCatalogPasses) {
  const auto r = run({"check", kData + "default_catalog.json", "--seed", "3", "--budget", "2"});
  EXPECT_EQ(r.code, 0) << r.out.substr(0, 2000);
  EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
}

TEST(Check, CorruptedCatalogIsInputError) {
  const auto r = run({"check", kFixtures + "corrupt_catalog.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("semilinearity(2)"), std::string::npos);
  EXPECT_EQ(run({"check", kFixtures + "malformed.json"}).code, 2);
  EXPECT_EQ(run({"check", "/nonexistent.json"}).code, 2);
}

TEST(Check, EmptyCatalog) {
  const auto r = run({"check", kFixtures + "empty_catalog.json", "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["summary"]["total"], 0);
  EXPECT_TRUE(j["results"].empty());
}

TEST(Check, DeterministicAndAtomicOut) {
  const auto dir = scratch_dir();
  const std::vector<std::string> args{"check", kData + "default_catalog.json", "--seed", "11", "--budget", "1",
                                      "--format", "structured"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  auto with_out = args;
  with_out.push_back("--out");
  with_out.push_back((dir / "report.json").string());
  EXPECT_EQ(run(with_out).code, 0);
  EXPECT_EQ(slurp(dir / "report.json"), a.out);
  EXPECT_NE(run({"check", kData + "default_catalog.json", "--seed", "12", "--budget", "1", "--format", "structured"}).out,
            a.out);
  fs::remove_all(dir);
}

TEST(Probe, CountsAndLabel) {
  const auto dir = scratch_dir();
  const auto cat = write_module(dir, "cat.json", Json::parse(R"json({
    "algebras": {"A": {"p": 2, "labels": ["1", "t"], "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], "one": [1, 0]}},
    "modules": {
      "residue": {"side": "right", "dim": 1, "algebra": "A", "action": [[[1]], [[0]]], "X": [[1]]},
      "zero": {"side": "right", "dim": 0, "algebra": "A", "action": [[], []], "X": []},
      "not-divisible": {"side": "right", "dim": 1, "algebra": "A", "action": [[[1]], [[0]]], "X": [[0]]}
    }})json"));
  const auto r = run({"probe-question", cat, "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["label"],
            "finite by construction at this scale — experimental data only, not evidence for the open question");
  ASSERT_EQ(j["modules"].size(), 2u);
  EXPECT_EQ(j["modules"][0]["module"], "residue");
  EXPECT_EQ(j["modules"][0]["count"], 2);
  EXPECT_EQ(j["modules"][1]["count"], 1);
  EXPECT_EQ(j["partial"], false);

  const auto tight = Json::parse(run({"probe-question", cat, "--budget", "1", "--format", "structured"}).out);
  EXPECT_EQ(tight["partial"], true);
  fs::remove_all(dir);
}

TEST(Usage, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"analyze", kData + "natural_f2t2.json", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

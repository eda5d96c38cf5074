#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "fixtures.hpp"

using namespace qca;
using fixtures::data;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QCA_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

const std::string kron_file = data("quivers/kronecker.json");
const std::string a2_file = data("quivers/a2.json");

}  // namespace

TEST(Cli, LambdaCheck) {
  const auto r = run("lambda --quiver " + kron_file + " --check");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "compatible, D = I2\n");
}

TEST(Cli, Matrices) {
  const auto r = run("matrices --quiver " + kron_file + " --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["btilde"], json::parse("[[0,2],[-2,0],[-1,0],[0,-1]]"));
}

TEST(Cli, CCMapRegular) {
  const auto r = run("ccmap --quiver " + kron_file + " --module " + data("modules/rp1.json") + " --q 2");
  ASSERT_EQ(r.code, 0);
  const auto lat = lattice_from_file(kron_file);
  const std::string text = r.out.substr(r.out.find('=') + 2);
  const auto parsed = parse_torus(text.substr(0, text.size() - 1), SqrtField(2), lat.lambda);
  EXPECT_EQ(parsed, cc(module_from_file(data("modules/rp1.json"), lat), lat));
  EXPECT_EQ(parsed.size(), 3u);
}

TEST(Cli, CCMapShift) {
  const auto r = run("ccmap --quiver " + kron_file + " --q 2 --shift 1:2,2:1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "X = X[(2,1,0,0)]\n");
}

TEST(Cli, CCMapJsonRoundTrip) {
  const auto r = run("ccmap --quiver " + kron_file + " --module " + data("modules/rp1_f3.json") + " --q 3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  const auto lat = lattice_from_file(kron_file);
  EXPECT_EQ(parse_torus(j["value"]["text"].get<std::string>(), SqrtField(3), lat.lambda),
            cc(module_from_file(data("modules/rp1_f3.json"), lat), lat));
  EXPECT_EQ(j["terms"].size(), 3u);
}

TEST(Cli, MutateFormalRoundTrip) {
  const auto r = run("mutate --quiver " + kron_file + " --seq 1,2 --formal --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  const auto lat = lattice_from_file(kron_file);
  const auto seed = mutate_sequence(initial_seed(lat, LaurentRing{}), {1, 2});
  for (std::size_t i = 0; i < 4; ++i)
    EXPECT_EQ(parse_torus(j["vars"][i]["text"].get<std::string>(), LaurentRing{}, lat.lambda), seed.vars[i]);
}

TEST(Cli, VerifyHallExhaustive) {
  const auto r = run("verify hall --quiver " + kron_file + " --q 2 --exhaustive 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hall: 28 pass, 0 fail, 0 inapplicable"), std::string::npos);
}

TEST(Cli, VerifyQinSingle) {
  const auto r = run("verify qin --quiver " + a2_file + " --q 2 --M " + data("modules/s2.json") + " --N " + data("modules/s1.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS qin", 0), 0u);
}

TEST(Cli, VerifyReflectionNonRigidFails) {
  const auto m = write_temp("a2_s1s2.json", R"({"p":2,"dims":[1,1,0,0]})");
  const auto r = run("verify reflection --quiver " + a2_file + " --q 2 --vertex 1 --M " + m);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("FAIL reflection", 0), 0u);
}

TEST(Cli, VerifyReflectionRigidExhaustive) {
  const auto r = run("verify reflection --quiver " + data("quivers/a3.json") + " --q 2 --vertex 1 --exhaustive 3");
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, BasisKronecker) {
  const auto r = run("basis kronecker --quiver " + kron_file + " --q 2 --bound 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d (1,1) | (-1,1,1,1) | 1"), std::string::npos);
  EXPECT_NE(r.out.find(": triangular"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::string args = "verify green --quiver " + a2_file + " --q 2 --exhaustive 3 --format json";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(run("matrices --quiver /nonexistent.json").code, 2);
  EXPECT_EQ(run("matrices --quiver " + write_temp("bad.json", "{\"m\": 2,")).code, 2);
  EXPECT_EQ(run("matrices --quiver " + write_temp("cyc.json", R"({"m":2,"n":2,"arrows":[[1,2],[2,1]]})")).code, 2);
  EXPECT_EQ(run("ccmap --quiver " + kron_file + " --module " + data("modules/rp1.json") + " --q 3").code, 2);
  EXPECT_EQ(run("ccmap --quiver " + kron_file + " --q 4").code, 2);
  EXPECT_EQ(run("ccmap --quiver " + kron_file + " --q 2 --shift 9:1").code, 2);
  EXPECT_EQ(run("verify bogus --quiver " + kron_file).code, 2);
  EXPECT_EQ(run("verify hall --quiver " + kron_file + " --q 2").code, 2);
  const auto m = write_temp("badrows.json", R"({"p":2,"dims":[1,1,0,0],"maps":[{"arrow":0,"matrix":[[1],[1]]}]})");
  EXPECT_EQ(run("ccmap --quiver " + kron_file + " --q 2 --module " + m).code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Io, QuiverFileRoundTrip) {
  const auto f = quiver_from_json(read_json_file(kron_file));
  const auto j = quiver_to_json(f.quiver, f.lambda);
  const auto g = quiver_from_json(j);
  EXPECT_EQ(g.quiver, f.quiver);
  EXPECT_EQ(*g.lambda, *f.lambda);
}

TEST(Io, ModuleFileRoundTrip) {
  const auto lat = lattice_from_file(kron_file);
  const auto m = module_from_file(data("modules/rp1_f3.json"), lat);
  EXPECT_TRUE(is_iso(module_from_json(module_to_json(m), rep_quiver(lat.quiver)), m));
  EXPECT_THROW(module_from_json(json::parse(R"({"p":4,"dims":[0,0,0,0]})"), rep_quiver(lat.quiver)), InvalidInput);
}

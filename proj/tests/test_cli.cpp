// Copyright 2026 The boundent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "boundent/cli.hpp"
#include "boundent/io.hpp"

using namespace boundent;
using io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("boundent_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string build(const std::string& name, std::vector<std::string> args) {
    const std::string p = path(name);
    args.insert(args.begin(), "build");
    args.push_back("--out");
    args.push_back(p);
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return p;
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, BuildSmolin) {
  const auto r = run({"build", "smolin", "--out", path("s.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["command"], "build");
  EXPECT_NEAR(j["results"]["purity"].get<double>(), 0.25, 1e-12);
  EXPECT_EQ(j["results"]["rank"], 4);
  const auto rho = io::state_from_json(Json::parse(io::read_text(path("s.json"))));
  EXPECT_EQ(rho.n_qubits(), 4);
  EXPECT_EQ(j["results"]["state_file"]["sha256"], io::sha256_hex(io::read_text(path("s.json"))));
}

TEST_F(Cli, BuildIsBitExact) {
  const auto p = build("a.json", {"abls", "a=2", "b=3", "c=5"});
  const auto rho = io::state_from_json(Json::parse(io::read_text(p)));
  const auto ref = abls({2, 3, 5});
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(rho(r, c), ref(r, c));
  }
}

TEST_F(Cli, BuildNotesOutsideRange) {
  const auto r = run({"build", "chi3", "x=0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json notes = r.json()["results"]["notes"];
  ASSERT_EQ(notes.size(), 1U);
  EXPECT_NE(notes[0].get<std::string>().find("1/3"), std::string::npos);
  EXPECT_TRUE(run({"build", "chi3", "x=1/3"}).json()["results"]["notes"].empty());
}

TEST_F(Cli, BuildErrors) {
  auto r = run({"build", "werner"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: family:", 0), 0U) << r.err;

  r = run({"build", "abls", "a=0", "b=1", "c=1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: positivity:", 0), 0U) << r.err;

  r = run({"build", "dur", "n=4", "x=1.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: parameter_range:", 0), 0U) << r.err;

  r = run({"build", "ghz", "n=3", "sign=+", "bogus=1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: parameter:", 0), 0U) << r.err;

  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: usage:", 0), 0U) << r.err;
}

TEST_F(Cli, DiagnoseSmolin) {
  const auto p = build("s.json", {"smolin"});
  const auto r = run({"diagnose", p, "--all-cuts"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["verdict"], "bound_entangled");
  ASSERT_EQ(j["results"]["cuts"].size(), 7U);
  for (const auto& c : j["results"]["cuts"]) {
    const double n = c["negativity"].get<double>();
    if (c["group_a"] == Json({1})) EXPECT_NEAR(n, 1.0, 1e-9);
    if (c["group_a"] == Json({1, 2})) EXPECT_NEAR(n, 0.0, 1e-10);
  }
  EXPECT_EQ(j["results"]["certificate"]["pair_covers"].size(), 6U);
  EXPECT_EQ(j["inputs"]["state"]["sha256"], io::sha256_hex(io::read_text(p)));
}

TEST_F(Cli, DiagnoseChiAndMixed) {
  const auto chi = build("c.json", {"chi3", "x=1/3"});
  auto j = run({"diagnose", chi}).json();
  EXPECT_NEAR(j["results"]["pt_inequality_value"].get<double>(), 4.0 / 3.0, 1e-12);
  EXPECT_EQ(j["results"]["pt_inequality_violated"], true);
  EXPECT_EQ(j["verdict"], "bound_entangled");

  const auto mixed = build("m.json", {"dur_cirac", "n=3", "lambda0_plus=0.125", "lambda0_minus=0.125",
                                       "lambdas=1:0.125,2:0.125,3:0.125"});
  j = run({"diagnose", mixed, "--all-cuts"}).json();
  EXPECT_EQ(j["verdict"], "no_entanglement_detected");
  EXPECT_EQ(j["results"]["all_ppt"], true);
}

TEST_F(Cli, DiagnoseUpbHint) {
  const auto p = build("u.json", {"upb"});
  EXPECT_EQ(run({"diagnose", p}).json()["verdict"], "no_entanglement_detected");
  const Json j = run({"diagnose", p, "--hint", "upb"}).json();
  EXPECT_EQ(j["verdict"], "bound_entangled");
  EXPECT_EQ(j["results"]["certificate"]["entangled_evidence"], "upb_construction");
}

TEST_F(Cli, DiagnoseRejectsBadFiles) {
  io::write_text(path("bad.json"), "{\"n_qubits\": 1, \"matrix_re\": [[0.6, 0], [0, 0.5]], \"matrix_im\": [[0, 0], [0, 0]]}");
  auto r = run({"diagnose", path("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: trace:", 0), 0U) << r.err;

  io::write_text(path("herm.json"), "{\"n_qubits\": 1, \"matrix_re\": [[0.5, 0.2], [0, 0.5]], \"matrix_im\": [[0, 0], [0, 0]]}");
  r = run({"diagnose", path("herm.json")});
  EXPECT_EQ(r.err.rfind("error: hermiticity:", 0), 0U) << r.err;

  io::write_text(path("psd.json"), "{\"n_qubits\": 1, \"matrix_re\": [[1.5, 0], [0, -0.5]], \"matrix_im\": [[0, 0], [0, 0]]}");
  r = run({"diagnose", path("psd.json")});
  EXPECT_EQ(r.err.rfind("error: psd:", 0), 0U) << r.err;

  io::write_text(path("junk.json"), "not json");
  r = run({"diagnose", path("junk.json")});
  EXPECT_EQ(r.err.rfind("error: format:", 0), 0U) << r.err;

  r = run({"diagnose", path("missing.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: io:", 0), 0U) << r.err;
}

TEST_F(Cli, SimulateBuiltins) {
  const auto abls_file = build("a.json", {"abls", "a=2", "b=3", "c=5"});
  auto r = run({"simulate", "--builtin", "abls", "a=2", "b=3", "c=5", "--target", abls_file});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["verdict"], "match");
  EXPECT_LE(j["results"]["distance_to_target"].get<double>(), 1e-10);
  EXPECT_EQ(j["results"]["branches"].size(), 7U);

  const auto upb_file = build("u.json", {"upb"});
  j = run({"simulate", "--builtin", "upb", "--target", upb_file}).json();
  EXPECT_EQ(j["verdict"], "match");
  EXPECT_LE(j["results"]["distance_to_target"].get<double>(), 1e-10);
}

TEST_F(Cli, SimulateSchemeFileAndSampling) {
  auto r = run({"simulate", "--builtin", "smolin", "--emit-scheme", path("scheme.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto target = build("s.json", {"smolin"});
  r = run({"--seed", "5", "simulate", "--scheme", path("scheme.json"), "--target", target, "--shots", "20000",
           "--out", path("sim.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["verdict"], "match");
  EXPECT_EQ(j["seed"], 5);
  EXPECT_LT(j["results"]["sampling"]["empirical_distance"].get<double>(), 0.1);
  EXPECT_TRUE(std::filesystem::exists(path("sim.json")));
}

TEST_F(Cli, SimulateProbabilitySumError) {
  const Json scheme = {
      {"n_qubits", 1},
      {"branches",
       {{{"p", 0.5}, {"source", {{"kind", "single_photon"}, {"re", {1, 0}}, {"im", {0, 0}}}}},
        {{"p", 0.4}, {"source", {{"kind", "single_photon"}, {"re", {0, 1}}, {"im", {0, 0}}}}}}}};
  io::write_text(path("bad.json"), scheme.dump());
  const auto r = run({"simulate", "--scheme", path("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: probability_sum:", 0), 0U) << r.err;
  EXPECT_NE(r.err.find("branch probabilities sum to 0.9"), std::string::npos) << r.err;
}

TEST_F(Cli, SimulateDimensionMismatch) {
  const auto target = build("g.json", {"ghz", "n=2", "sign=+"});
  const auto r = run({"simulate", "--builtin", "smolin", "--target", target});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: dimension:", 0), 0U) << r.err;
  EXPECT_EQ(run({"simulate"}).code, 1);
}

TEST_F(Cli, NoiseSweep) {
  const auto p = build("s.json", {"smolin"});
  auto r = run({"noise-sweep", p, "--cut", "1", "--eps-max", "1", "--steps", "10", "--threshold"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  const Json table = j["results"]["table"];
  ASSERT_EQ(table.size(), 11U);
  const Json diag = run({"diagnose", p, "--all-cuts"}).json();
  double diag_neg = -1;
  for (const auto& c : diag["results"]["cuts"]) {
    if (c["group_a"] == Json({1})) diag_neg = c["negativity"].get<double>();
  }
  EXPECT_EQ(table[0]["negativity"].get<double>(), diag_neg);
  EXPECT_EQ(table[10]["negativity"].get<double>(), 0.0);
  const double est = j["results"]["threshold"]["estimate"].get<double>();
  EXPECT_GT(est, 0.0);
  EXPECT_LT(est, 1.0);
  EXPECT_LE(j["results"]["threshold"]["width"].get<double>(), 1e-6);

  r = run({"noise-sweep", p, "--cut", "1,2", "--threshold"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: npt:", 0), 0U) << r.err;

  r = run({"noise-sweep", p, "--cut", "1,9"});
  EXPECT_EQ(r.err.rfind("error: cut:", 0), 0U) << r.err;
}

TEST_F(Cli, Bell) {
  const auto g = build("g.json", {"ghz", "n=3", "sign=+"});
  auto j = run({"bell", g, "--restarts", "8", "--iters", "100"}).json();
  EXPECT_GE(j["results"]["best_value"].get<double>(), 2.0 - 1e-6);
  EXPECT_EQ(j["verdict"], "violation");
  EXPECT_EQ(j["results"]["settings"].size(), 3U);

  const auto prod = build("p.json", {"dur_cirac", "n=2", "lambda0_plus=0.5", "lambda0_minus=0.5"});
  j = run({"bell", prod, "--restarts", "4", "--iters", "50"}).json();
  EXPECT_EQ(j["verdict"], "no_violation");
  EXPECT_EQ(j["results"]["violation"], false);

  const auto big = build("big.json", {"ghz", "n=9", "sign=+"});
  const auto r = run({"bell", big});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: register_size:", 0), 0U) << r.err;
}

TEST_F(Cli, UpbCheck) {
  auto j = run({"upb-check"}).json();
  EXPECT_EQ(j["verdict"], "unextendible");
  EXPECT_EQ(j["results"]["orthonormal"], true);
  EXPECT_LE(j["results"]["decomposition_residual"].get<double>(), 1e-12);
  EXPECT_TRUE(j["results"]["witness"].is_null());

  j = run({"upb-check", "--drop", "4"}).json();
  EXPECT_EQ(j["verdict"], "extendible");
  EXPECT_FALSE(j["results"]["witness"].is_null());
  EXPECT_LE(j["results"]["witness_max_overlap"].get<double>(), 1e-12);

  const auto r = run({"upb-check", "--drop", "7"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: parameter_range:", 0), 0U) << r.err;
}

TEST_F(Cli, ReportsAreDeterministic) {
  const auto p = build("d.json", {"dur", "n=4", "x=0.3"});
  const std::vector<std::vector<std::string>> commands{
      {"diagnose", p, "--all-cuts"},
      {"--seed", "9", "bell", p, "--restarts", "4", "--iters", "40"},
      {"--seed", "9", "simulate", "--builtin", "dur", "n=4", "x=0.3", "--shots", "3000"},
      {"noise-sweep", p, "--cut", "1,2", "--threshold"},
      {"upb-check", "--drop", "2"}};
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.json()["version"], io::kToolVersion);
  }
}

TEST_F(Cli, OutWritesReport) {
  const auto p = build("s.json", {"smolin"});
  const auto r = run({"--out", path("report.json"), "diagnose", p});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(io::read_text(path("report.json"))), r.json());
}

TEST_F(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("noise-sweep"), std::string::npos);
}

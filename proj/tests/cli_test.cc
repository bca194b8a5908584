// Copyright 2026 The SDGR Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "sdgr/file_format.h"

namespace sdgr::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sdgr_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // params, keygen and encaps on p19; returns the encapsulated key.
  std::string Pipeline(const std::string& l1 = "256") {
    EXPECT_EQ(Invoke({"params", "--set", "p19", "--seed", "1", "--out", Path("p")}).code, 0);
    EXPECT_EQ(Invoke({"keygen", "--params", Path("p"), "--seed", "2", "--l1", l1,
                   "--out", Path("k")}).code, 0);
    const Result enc = Invoke({"encaps", "--params", Path("p"), "--in", Path("k.pub"),
                            "--seed", "3", "--out", Path("c")});
    EXPECT_EQ(enc.code, 0) << enc.err;
    return enc.out;
  }

  Result Decaps() {
    return Invoke({"decaps", "--params", Path("p"), "--key", Path("k.priv"), "--in", Path("c")});
  }

  fs::path dir_;
};

TEST_F(CliTest, ParamsAreDeterministicUnderSeed) {
  const Result r = Invoke({"params", "--set", "p19", "--seed", "5", "--out", Path("a")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("p=19 m=1 n=19 lambda=2 h=mixed"), std::string::npos);
  ASSERT_EQ(Invoke({"params", "--set", "p19", "--seed", "5", "--out", Path("b")}).code, 0);
  EXPECT_EQ(ReadBinaryFile(Path("a")), ReadBinaryFile(Path("b")));
  ASSERT_EQ(Invoke({"params", "--set", "p19", "--seed", "6", "--out", Path("c")}).code, 0);
  EXPECT_NE(ReadBinaryFile(Path("a")), ReadBinaryFile(Path("c")));
}

TEST_F(CliTest, ToySetWarns) {
  const Result r = Invoke({"params", "--set", "toy", "--out", Path("t")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("desk-scale only"), std::string::npos);
}

TEST_F(CliTest, UnknownSetFails) {
  EXPECT_EQ(Invoke({"params", "--set", "p17", "--out", Path("x")}).code, 1);
  EXPECT_NE(Invoke({"frobnicate"}).code, 0);
}

TEST_F(CliTest, FullPipelineAgrees) {
  const std::string key = Pipeline();
  EXPECT_EQ(key.size(), 65u);  // 64 lowercase hex digits and a newline
  EXPECT_EQ(key.find_first_not_of("0123456789abcdef\n"), std::string::npos);
  const Result dec = Decaps();
  EXPECT_EQ(dec.code, 0);
  EXPECT_EQ(dec.out, key);
}

TEST_F(CliTest, ShorterKeyLengths) {
  const std::string key = Pipeline("128");
  EXPECT_EQ(key.size(), 33u);
  EXPECT_EQ(Decaps().out, key);
}

TEST_F(CliTest, TruncatedCiphertextExitsTwo) {
  Pipeline();
  std::vector<std::uint8_t> ct = ReadBinaryFile(Path("c"));
  ct.resize(ct.size() - 5);
  WriteBinaryFile(Path("c"), ct);
  const Result dec = Decaps();
  EXPECT_EQ(dec.code, kExitCorruptFile);
  EXPECT_TRUE(dec.out.empty());
}

TEST_F(CliTest, ResealedTamperedCiphertextGivesDifferentKey) {
  const std::string key = Pipeline();
  UnwrappedFile f = UnwrapFile(ReadBinaryFile(Path("c")));
  f.body[10] ^= 0x01;
  WriteBinaryFile(Path("c"), WrapFile(f.header, f.kind, f.body));
  const Result dec = Decaps();
  EXPECT_EQ(dec.code, 0);
  EXPECT_EQ(dec.out.size(), key.size());
  EXPECT_NE(dec.out, key);
}

TEST_F(CliTest, ParameterMismatchExitsThree) {
  Pipeline();
  ASSERT_EQ(Invoke({"params", "--set", "p23", "--seed", "1", "--out", Path("q")}).code, 0);
  EXPECT_EQ(Invoke({"decaps", "--params", Path("q"), "--key", Path("k.priv"),
                 "--in", Path("c")}).code,
            kExitParameterMismatch);
  EXPECT_EQ(Invoke({"encaps", "--params", Path("p"), "--in", Path("k.pub"),
                 "--l1", "128", "--out", Path("c2")}).code,
            kExitParameterMismatch);
  EXPECT_EQ(Invoke({"keygen", "--params", Path("p"), "--set", "p31", "--out", Path("z")}).code,
            kExitParameterMismatch);
}

TEST_F(CliTest, KexDemoReportsMatchAndIsReproducible) {
  const Result a = Invoke({"kexdemo", "--set", "p41", "--seed", "9"});
  ASSERT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("keys match\n"), std::string::npos);
  EXPECT_NE(a.out.find("pk_i: "), std::string::npos);
  EXPECT_EQ(Invoke({"kexdemo", "--set", "p41", "--seed", "9"}).out, a.out);
}

TEST_F(CliTest, SolveSdpdOnToy) {
  const Result r = Invoke({"solve-sdpd", "--set", "toy", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("search space: 59049"), std::string::npos);
  EXPECT_NE(r.out.find("CSDP key recovered: true"), std::string::npos);
  EXPECT_NE(r.out.find("witnesses: "), std::string::npos);
}

TEST_F(CliTest, SolveSdpdGuardExitsFour) {
  EXPECT_EQ(Invoke({"solve-sdpd", "--set", "p19", "--seed", "4"}).code, kExitGuard);
}

TEST_F(CliTest, BenchMatchesCostModel) {
  const Result r = Invoke({"bench", "--set", "p19", "--seed", "1", "--iterations", "5"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("product field multiplications: 12996 vs 12996 ok"),
            std::string::npos);
  EXPECT_NE(r.out.find("adjunct field multiplications: 304 vs 304 ok"),
            std::string::npos);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
}

TEST_F(CliTest, PkeDemoRoundTrips) {
  const Result r = Invoke({"pkedemo", "--set", "p23", "--seed", "1", "--message", "hi there"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("recovered: hi there\n"), std::string::npos);
  EXPECT_EQ(Invoke({"pkedemo", "--set", "toy", "--message", "x"}).code, 1);
}

}  // namespace
}  // namespace sdgr::cli

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(MDBV_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("mdbv_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir / "sigs");
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string p(const std::string& name) const { return (dir / name).string(); }

  // setup → register ×3 → sign ×3 into sigs/.
  void pipeline(const std::string& seed, const std::string& delta = "617265612d31") {
    ASSERT_EQ(run("setup --seed " + seed + " --out " + p("system.txt") + " --msk " + p("msk.txt")).code, 0);
    for (int i = 1; i <= 3; ++i) {
      const std::string id = "V00" + std::to_string(i);
      ASSERT_EQ(run("register --params " + p("system.txt") + " --msk " + p("msk.txt") + " --id " + id +
                    " --seed " + seed + " --out " + p(id + ".creds"))
                    .code,
                0);
      spit(dir / (id + ".data"), "speed=" + std::to_string(40 + i));
      ASSERT_EQ(run("sign --params " + p("system.txt") + " --creds " + p(id + ".creds") + " --delta " +
                    delta + " --data " + p(id + ".data") + " --seed " + seed + " --out " +
                    p("sigs/" + id + ".sig"))
                    .code,
                0);
    }
  }

  fs::path dir;
};

}  // namespace

TEST_F(CliTest, PipelineVerifies) {
  pipeline("s1");
  ASSERT_EQ(run("aggregate --params " + p("system.txt") + " " + p("sigs") + " --out " + p("batch.bin")).code, 0);
  const Result r = run("verify --params " + p("system.txt") + " " + p("batch.bin"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "VALID\n");
  const Result single = run("verify --params " + p("system.txt") + " " + p("sigs/V002.sig"));
  EXPECT_EQ(single.code, 0);
  EXPECT_EQ(single.out, "VALID\n");
}

TEST_F(CliTest, FlippedDataByteIsInvalidNotADecodeError) {
  pipeline("s1");
  ASSERT_EQ(run("aggregate --params " + p("system.txt") + " " + p("sigs") + " --out " + p("batch.bin")).code, 0);
  std::string batch = slurp(dir / "batch.bin");
  // Last byte of the last entry's datum sits right before R and V.
  batch[batch.size() - 131] ^= 0x01;
  spit(dir / "bad.bin", batch);
  const Result r = run("verify --params " + p("system.txt") + " " + p("bad.bin"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "INVALID\n");
}

TEST_F(CliTest, TruncatedBatchIsADecodeError) {
  pipeline("s1");
  ASSERT_EQ(run("aggregate --params " + p("system.txt") + " " + p("sigs") + " --out " + p("batch.bin")).code, 0);
  const std::string batch = slurp(dir / "batch.bin");
  spit(dir / "short.bin", batch.substr(0, batch.size() - 10));
  EXPECT_EQ(run("verify --params " + p("system.txt") + " " + p("short.bin")).code, 2);
}

TEST_F(CliTest, MixedStateInformationRefusesToAggregate) {
  pipeline("s1");
  spit(dir / "other.data", "x");
  ASSERT_EQ(run("sign --params " + p("system.txt") + " --creds " + p("V001.creds") +
                " --delta 617265612d32 --data " + p("other.data") + " --seed s1 --out " + p("sigs/V004.sig"))
                .code,
            0);
  EXPECT_EQ(run("aggregate --params " + p("system.txt") + " " + p("sigs") + " --out " + p("batch.bin")).code, 2);
  EXPECT_FALSE(fs::exists(dir / "batch.bin"));
}

TEST_F(CliTest, SameSeedSameFiles) {
  pipeline("s1");
  ASSERT_EQ(run("aggregate --params " + p("system.txt") + " " + p("sigs") + " --out " + p("batch.bin")).code, 0);
  const std::string first = slurp(dir / "batch.bin") + slurp(dir / "V001.creds") + slurp(dir / "msk.txt");
  pipeline("s1");
  ASSERT_EQ(run("aggregate --params " + p("system.txt") + " " + p("sigs") + " --out " + p("batch.bin")).code, 0);
  EXPECT_EQ(slurp(dir / "batch.bin") + slurp(dir / "V001.creds") + slurp(dir / "msk.txt"), first);
  const std::string msk = slurp(dir / "msk.txt");
  pipeline("s2");
  EXPECT_NE(slurp(dir / "msk.txt"), msk);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --params " + p("missing.txt") + " " + p("missing.bin")).code, 2);
  EXPECT_EQ(run("sign --params x").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(CliTest, CorruptedKeyFileNamesTheFile) {
  pipeline("s1");
  spit(dir / "system.txt", "p=zz\n");
  const std::string cmd = std::string(MDBV_CLI_PATH) + " verify --params " + p("system.txt") + " " +
                          p("sigs/V001.sig") + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  char buf[1024] = {};
  const std::size_t got = fread(buf, 1, sizeof buf - 1, pipe);
  const int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_NE(std::string(buf, got).find("system.txt"), std::string::npos);
}

TEST_F(CliTest, GenParamsIsDeterministic) {
  ASSERT_EQ(run("gen-params --level 80 --seed g --out " + p("a.txt")).code, 0);
  ASSERT_EQ(run("gen-params --level 80 --seed g --out " + p("b.txt")).code, 0);
  EXPECT_EQ(slurp(dir / "a.txt"), slurp(dir / "b.txt"));
  EXPECT_EQ(run("gen-params --level 60 --seed g --out " + p("c.txt")).code, 2);
  ASSERT_EQ(run("setup --params " + p("a.txt") + " --seed s --out " + p("sys.txt") + " --msk " + p("m.txt")).code, 0);
}

TEST_F(CliTest, SimulateHonestAndCorrupted) {
  const Result ok = run("simulate --n 5 --rounds 2 --seed x --out " + p("a.csv"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("round 1: VALID"), std::string::npos);
  EXPECT_NE(ok.out.find("round 2: VALID"), std::string::npos);

  const Result bad = run("simulate --n 5 --rounds 2 --seed x --corruption 1.0");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("round 1: INVALID"), std::string::npos);
  EXPECT_NE(bad.out.find("round 2: INVALID"), std::string::npos);
  EXPECT_EQ(bad.out.find(": VALID"), std::string::npos);

  ASSERT_EQ(run("simulate --n 5 --rounds 2 --seed x --out " + p("b.csv")).code, 0);
  EXPECT_EQ(slurp(dir / "a.csv"), slurp(dir / "b.csv"));
  EXPECT_EQ(run("simulate --corruption 2").code, 2);
  EXPECT_EQ(run("simulate --mode fast").code, 2);
}

TEST_F(CliTest, SimulateCompare) {
  const Result r = run("simulate --n 4 --rounds 1 --seed c --compare --out " + p("cmp.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("modes agree: yes"), std::string::npos);
  const std::string csv = slurp(dir / "cmp.csv");
  EXPECT_NE(csv.find(",aggregated,"), std::string::npos);
  EXPECT_NE(csv.find(",un_agg,"), std::string::npos);
}

TEST_F(CliTest, BenchReplaysReferenceFigures) {
  const Result r = run("bench --fixtures paper --energy --n 1,20 --out-dir " + p("bench"));
  ASSERT_EQ(r.code, 0);
  for (const char* golden : {"148", "0.3892032", "0.4406496", "1.5451104", "566.875", "53.678", "112.197"}) {
    EXPECT_NE(r.out.find(golden), std::string::npos) << golden;
  }
  EXPECT_NE(slurp(dir / "bench/sizes.csv").find("MDBV,1,64,20,148"), std::string::npos);
  EXPECT_NE(slurp(dir / "bench/energy.csv").find(",1.5451104,"), std::string::npos);
  EXPECT_NE(slurp(dir / "bench/costs.csv").find("MDBV,1,53.678,112.197"), std::string::npos);
}

TEST_F(CliTest, BenchSingleSchemeAndErrors) {
  const Result r = run("bench --fixtures paper --scheme MDBV --n 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("MDBV,1,64,20,148"), std::string::npos);
  EXPECT_EQ(r.out.find("ZQWZ"), std::string::npos);
  EXPECT_EQ(run("bench --n 0").code, 2);
  EXPECT_EQ(run("bench --scheme BLS").code, 2);
  EXPECT_EQ(run("bench --fixtures " + p("nope.txt")).code, 2);
}

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
};

Result run(const std::string& args, bool with_stderr = false) {
    const std::string cmd = std::string("'") + POLEDEFECT_CLI + "' " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

const std::string segre = "\"(x+y+z+u+v)^3-(x^3+y^3+z^3+u^3+v^3)\"";

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / ("poledefect_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST(Cli, DefectFromExpression) {
    const auto r = run("defect --expr " + segre);
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("def(X) = 5"), std::string::npos) << r.out;
}

TEST(Cli, TermsThenDefectFromFile) {
    const auto dir = scratch_dir();
    const auto terms = run("terms --expr " + segre);
    ASSERT_EQ(terms.status, 0);
    {
        std::ofstream(dir / "segre.terms") << terms.out;
    }
    const auto r = run("defect --input '" + (dir / "segre.terms").string() + "' --json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["defect"], 5);
    EXPECT_EQ(j["gamma"], 5);
    EXPECT_EQ(j["mode"], "defect");
    fs::remove_all(dir);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
    const auto a = run("defect --expr " + segre + " --json --nodes 10");
    const auto b = run("defect --expr " + segre + " --json --nodes 10");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["ih"]["sigma"], 5);
}

TEST(Cli, NonHomogeneousInput) {
    const auto r = run("defect --expr \"x^2+y\"", true);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("NonHomogeneous"), std::string::npos) << r.out;
}

TEST(Cli, ParseErrorExitCode) {
    const auto r = run("defect --expr \"x+*y\"", true);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("position"), std::string::npos) << r.out;
    EXPECT_EQ(run("defect").status, 2);
    EXPECT_EQ(run("defect --expr x --primes 11").status, 2);
    EXPECT_EQ(run("nonsense").status, 2);
}

TEST(Cli, ExactBudgetExitCode) {
    const auto r = run("defect --expr " + segre + " --exact --exact-max-cells 100", true);
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.out.find("budget"), std::string::npos) << r.out;
}

TEST(Cli, NodalQuinticIntersectionCohomology) {
    const auto r = run("defect --expr \"(x+6*z)*(y^2-x^2)*(5*y^2-4*(x+z)^2)-(u+6*z)*(v^2-u^2)*(5*v^2-4*(u+z)^2)\""
                       " --nodes 118 --gr2-v 118");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("def(X) = 19"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("dim IH^3(X) = 6"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("19 >= 17  ok"), std::string::npos) << r.out;
}

TEST(Cli, OtherVariableCountsReportE2Piece) {
    const auto r = run("defect --expr \"x^3+y^3+z^3+u^3\" --vars x,y,z,u --json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["mode"], "e2_piece");
    EXPECT_TRUE(j["defect"].is_null());
}

TEST(Cli, DumpMatrices) {
    const auto dir = scratch_dir() / "mats";
    ASSERT_EQ(run("defect --expr " + segre + " --dump-matrices '" + dir.string() + "'").status, 0);
    std::ifstream in(dir / "B.txt");
    std::size_t rows = 0, cols = 0, nnz = 0;
    in >> rows >> cols >> nnz;
    EXPECT_EQ(rows, 75u);
    EXPECT_EQ(cols, 70u);
    EXPECT_TRUE(fs::exists(dir / "full.txt"));
    fs::remove_all(dir.parent_path());
}

TEST(Cli, Hodge) {
    const auto r = run("hodge --n 3 --d 5");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("euler = -200"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("1 101 101 1"), std::string::npos) << r.out;
    EXPECT_NE(run("hodge --n 3 --d 1").out.find("euler = 4"), std::string::npos);
    EXPECT_NE(run("hodge --n 3 --d 1").out.find(": 0 0 0 0"), std::string::npos);
    EXPECT_NE(run("hodge --n 1 --d 3").out.find("euler = 0"), std::string::npos);
    EXPECT_EQ(run("hodge --n 0 --d 3").status, 2);
    const auto j = nlohmann::json::parse(run("hodge --n 3 --d 6 --json").out);
    EXPECT_EQ(j["hodge_prim"][1], 255);
    EXPECT_EQ(j["middle_betti"], 520); // 5 + 255 + 255 + 5
}

TEST(Cli, CorpusFilterAndSkipSlow) {
    const auto one = run("corpus --filter segre");
    EXPECT_EQ(one.status, 0);
    EXPECT_NE(one.out.find("segre-cubic"), std::string::npos);
    EXPECT_NE(one.out.find("1 fixtures, all PASS"), std::string::npos) << one.out;

    const auto fast = run("corpus --skip-slow --json");
    ASSERT_EQ(fast.status, 0);
    const auto j = nlohmann::json::parse(fast.out);
    EXPECT_EQ(j["fixtures"].size(), 6u);
    EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, SmallMatricesAreCertifiedDespiteBadPrime) {
    // the Segre blocks are below the exact threshold, so p = 2 cannot change the answer
    const auto r = run("defect --expr " + segre + " --prime-list 2 --json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["defect"], 5);
    EXPECT_EQ(j["e2"]["blocks"]["B"]["rank"]["exact_rank"], 60);
    EXPECT_FALSE(j["e2"]["blocks"]["B"]["rank"]["certified"].get<bool>());
}

TEST(Cli, Help) {
    const auto r = run("--help");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("defect"), std::string::npos);
}

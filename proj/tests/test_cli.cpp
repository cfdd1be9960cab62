#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = helixforge::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("helixforge-cli-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

// Points HELIXFORGE_CONFIG at a file for one scope; restores the previous
// environment on the way out so test cases stay independent.
struct ConfigEnv {
    std::string saved;
    bool had = false;
    explicit ConfigEnv(const std::string& path) {
        if (const char* old = std::getenv("HELIXFORGE_CONFIG")) {
            saved = old;
            had = true;
        }
        ::setenv("HELIXFORGE_CONFIG", path.c_str(), 1);
    }
    ~ConfigEnv() {
        if (had)
            ::setenv("HELIXFORGE_CONFIG", saved.c_str(), 1);
        else
            ::unsetenv("HELIXFORGE_CONFIG");
    }
};

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    REQUIRE(bool(f));
    f << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(bool(f));
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
    std::size_t n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("seq: classic openings by default") {
    const RunResult r = run({"seq"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "lucas(P=1, k=0..7): 2,1,3,4,7,11,18,29\n"
          "fibonacci(P=1, k=0..8): 0,1,1,2,3,5,8,13,21\n");
}

TEST_CASE("seq: explicit family, range and parameter") {
    const RunResult r = run({"seq", "--P", "2", "--kind", "lucas", "--k-min", "-3",
                             "--k-max", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "lucas(P=2, k=-3..3): -14,6,-2,2,2,6,14\n");

    const RunResult f = run({"seq", "--P", "2", "--kind", "fibonacci", "--k-max", "4"});
    CHECK(f.code == 0);
    CHECK(f.out == "fibonacci(P=2, k=0..4): 0,1,2,5,12\n");
}

TEST_CASE("seq: bad arguments exit 1 with a message") {
    CHECK(run({"seq", "--P", "0"}).code == 1);
    CHECK(run({"seq", "--kind", "pell"}).code == 1);
    CHECK(run({"seq", "--k-min", "9"}).code == 1);
    const RunResult r = run({"seq", "--P", "0"});
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(r.out.empty());
}

TEST_CASE("eval: continued functions and maps") {
    const RunResult g0 = run({"eval", "--map", "g", "--t", "0"});
    CHECK(g0.code == 0);
    CHECK(g0.out == "g(0; P=1) = 2 + 0i\n");

    const RunResult g3 = run({"eval", "--map", "g", "--t", "3", "--P", "1"});
    CHECK(g3.code == 0);
    CHECK(g3.out.rfind("g(3; P=1) = 4", 0) == 0);

    const RunResult m = run({"eval", "--map", "psi2", "--t", "1"});
    CHECK(m.code == 0);
    CHECK(m.out ==
          "psi2(1; P=1)\n"
          "  definition  = -1 + 0i\n"
          "  closed-form = -1 + 0i\n");

    CHECK(run({"eval", "--map", "psi2"}).code == 1);
    CHECK(run({"eval", "--t", "1"}).code == 1);
    CHECK(run({"eval", "--map", "psi9", "--t", "1"}).code == 1);
}

TEST_CASE("helix: CSV to stdout by default") {
    const RunResult r = run({"helix", "--map", "psi2", "--tmin", "0", "--tmax", "2",
                             "--dt", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "t,x,y,z\n"
          "0,1,0,0\n"
          "1,-1,0,1\n"
          "2,1,0,2\n");
}

TEST_CASE("helix: svg needs a projection, others refuse one") {
    const RunResult svg = run({"helix", "--map", "psi3", "--tmax", "2", "--dt", "0.25",
                               "--format", "svg", "--projection", "xy"});
    CHECK(svg.code == 0);
    CHECK(svg.out.rfind("<svg ", 0) == 0);

    const RunResult clash = run({"helix", "--map", "psi3", "--tmax", "2", "--dt", "0.25",
                                 "--projection", "xy"});
    CHECK(clash.code == 1);
    CHECK(clash.err.find("--projection only applies to svg") != std::string::npos);

    CHECK(run({"helix", "--map", "psi3", "--format", "report"}).code == 1);
    CHECK(run({"helix", "--map", "psi3", "--format", "svg", "--projection", "ab"}).code == 1);
}

TEST_CASE("helix: --out writes the file atomically") {
    TempDir dir;
    const fs::path file = dir.path / "strand.csv";
    const RunResult r = run({"helix", "--map", "psi2", "--tmax", "2", "--dt", "1",
                             "--out", file.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(file) == "t,x,y,z\n0,1,0,0\n1,-1,0,1\n2,1,0,2\n");
    CHECK_FALSE(fs::exists(dir.path / "strand.csv.tmp"));
}

TEST_CASE("compose: obj with strand and rung segments") {
    const RunResult r = run({"compose", "--map", "psi1", "--P-b", "2", "--tmax", "2",
                             "--dt", "0.5", "--rung-stride", "2"});
    CHECK(r.code == 0);
    CHECK(count_lines_starting(r.out, "v ") == 10);
    CHECK(count_lines_starting(r.out, "l ") == 11);

    const RunResult mixed = run({"compose", "--map", "psi1", "--map-b", "psi2",
                                 "--tmax", "2", "--dt", "0.5", "--format", "json"});
    CHECK(mixed.code == 0);
    CHECK(mixed.out.find("\"map\": \"psi1\"") != std::string::npos);
    CHECK(mixed.out.find("\"map\": \"psi2\"") != std::string::npos);

    CHECK(run({"compose", "--map", "psi1", "--rung-stride", "0"}).code == 1);
    CHECK(run({"compose", "--map", "psi1", "--format", "csv"}).code == 1);
}

TEST_CASE("verify: full catalog passes, controls fail with exit 2") {
    const RunResult all = run({"verify", "--P", "3"});
    CHECK(all.code == 0);
    CHECK(count_lines_starting(all.out, "identity: ") == 8);
    CHECK(count_lines_starting(all.out, "status: all-pass") == 8);
    CHECK(all.out.find("candidate") == std::string::npos);

    const RunResult bad = run({"verify", "--identity", "psi6-candidate", "--k-min", "0",
                               "--k-max", "4"});
    CHECK(bad.code == 2);
    CHECK(bad.out.find("status: failed (4 of 5)") != std::string::npos);
    CHECK(bad.out.find("k=3 lhs=-6 rhs=-3") != std::string::npos);

    const RunResult named = run({"verify", "--identity", "pell-form", "--P", "5"});
    CHECK(named.code == 0);
    CHECK(named.out ==
          "identity: pell-form\n"
          "P: 5\n"
          "k-range: [-50, 200]\n"
          "status: all-pass\n");

    CHECK(run({"verify", "--identity", "no-such"}).code == 1);
}

TEST_CASE("verify: report goes to --out, exit code still reflects failures") {
    TempDir dir;
    const fs::path file = dir.path / "report.txt";
    const RunResult r = run({"verify", "--identity", "psi7-candidate", "--k-min", "0",
                             "--k-max", "2", "--out", file.string()});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(slurp(file).find("status: failed (3 of 3)") != std::string::npos);
}

TEST_CASE("pell: certified witness table") {
    const RunResult r = run({"pell", "--P", "1", "--k-min", "-3", "--k-max", "3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "pell(P=1, D=5, k=-3..3)\n"
          "k=-3: x=-4 y=2 x^2 - D*y^2 = -4\n"
          "k=-2: x=3 y=-1 x^2 - D*y^2 = 4\n"
          "k=-1: x=-1 y=1 x^2 - D*y^2 = -4\n"
          "k=0: x=2 y=0 x^2 - D*y^2 = 4\n"
          "k=1: x=1 y=1 x^2 - D*y^2 = -4\n"
          "k=2: x=3 y=1 x^2 - D*y^2 = 4\n"
          "k=3: x=4 y=2 x^2 - D*y^2 = -4\n");

    CHECK(run({"pell", "--k-min", "5", "--k-max", "1"}).code == 1);
}

TEST_CASE("discover: solved coefficients with disjoint re-verification") {
    const RunResult six = run({"discover", "--template", "psi6"});
    CHECK(six.code == 0);
    CHECK(six.out ==
          "template: psi6\n"
          "  coefficient[F(k)^2] = -D + 1\n"
          "  coefficient[F(k-1)*F(k+1)] = -1\n"
          "  re-verified: P in {4, 5}, k in [-10, 50]\n");

    const RunResult all = run({"discover"});
    CHECK(all.code == 0);
    CHECK(count_lines_starting(all.out, "template: ") == 3);
    CHECK(all.out.find("= -2*D") != std::string::npos);
    CHECK(all.out.find("= 2*D") != std::string::npos);
    CHECK(all.out.find("= D - 1") != std::string::npos);

    const RunResult thin = run({"discover", "--template", "psi6", "--P-set", "2"});
    CHECK(thin.code == 1);
    CHECK(thin.err.find("vary P") != std::string::npos);
}

TEST_CASE("top level: help exits 0, missing subcommand exits 1") {
    const RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);

    const RunResult none = run({});
    CHECK(none.code == 1);
    CHECK(none.err.find("helixforge") != std::string::npos);

    CHECK(run({"seq", "--bogus"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("config file fills unset flags; explicit flags win") {
    TempDir dir;
    const fs::path cfg = dir.path / "cfg";
    write_file(cfg, "# defaults for the whole pipeline\nP = 3\ndt=0.5\nkind=lucas\n");
    ConfigEnv env(cfg.string());

    // --P absent: the file supplies 3; dt is no seq option and is ignored.
    const RunResult from_cfg = run({"seq"});
    CHECK(from_cfg.code == 0);
    CHECK(from_cfg.out == "lucas(P=3, k=0..7): 2,3,11,36,119,393,1298,4287\n");

    // --P present: the command line wins over the file.
    const RunResult overridden = run({"seq", "--P", "1", "--kind", "both"});
    CHECK(overridden.code == 0);
    CHECK(overridden.out.rfind("lucas(P=1,", 0) == 0);

    // The same file drives another subcommand through its own keys.
    const RunResult grid = run({"helix", "--map", "psi2", "--tmax", "2"});
    CHECK(grid.code == 0);
    CHECK(count_lines_starting(grid.out, "0.5,") == 1);
}

TEST_CASE("config file problems are reported, not guessed around") {
    TempDir dir;

    {
        ConfigEnv env((dir.path / "absent").string());
        const RunResult r = run({"seq"});
        CHECK(r.code == 1);
        CHECK(r.err.find("not readable") != std::string::npos);
    }
    {
        const fs::path cfg = dir.path / "bad-line";
        write_file(cfg, "P\n");
        ConfigEnv env(cfg.string());
        CHECK(run({"seq"}).code == 1);
    }
    {
        const fs::path cfg = dir.path / "bad-value";
        write_file(cfg, "P=abc\n");
        ConfigEnv env(cfg.string());
        CHECK(run({"seq"}).code == 1);
    }
    {
        // An empty variable behaves like no config at all.
        ConfigEnv env("");
        const RunResult r = run({"seq", "--kind", "lucas"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("lucas(P=1,", 0) == 0);
    }
}

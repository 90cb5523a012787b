// End-to-end tests of the command line tool; the binary path is injected by
// the build as QENTROPY_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        env + (env.empty() ? "" : " ") + QENTROPY_CLI_PATH " " + args +
        " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream cells(line);
        while (std::getline(cells, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        rows.push_back(fields);
    }
    return rows;
}

constexpr const char* kHeader =
    "system,n,space,kind,alpha,beta,value,path,abs_err,status";

}  // namespace

TEST_CASE("entropy: closed-form zero row") {
    const auto r =
        run_cli("entropy --system robin --alpha 2:2:1 --space position");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 2);
    CHECK(r.output.substr(0, r.output.find('\n')) == kHeader);
    const auto& row = rows[1];
    REQUIRE(row.size() == 10);
    CHECK(row[0] == "robin");
    CHECK(row[1] == "1");
    CHECK(row[2] == "position");
    CHECK(row[3] == "renyi");
    CHECK(row[4] == "2");
    CHECK(row[6] == "0");  // negative-zero must be normalized
    CHECK(row[7] == "closed");
    CHECK(row[9] == "OK");
}

TEST_CASE("entropy: sub-threshold momentum order is kept as a divergent row") {
    const auto r = run_cli(
        "entropy --system q1d --n 1 --alpha 0.2:0.2:1 --space momentum");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][4] == "0.2");
    CHECK(rows[1][6] == "nan");
    CHECK(rows[1][9] == "DIVERGENT");
}

TEST_CASE("entropy: exact threshold endpoint is clamped outward") {
    const auto r = run_cli(
        "entropy --system q1d --n 1 --alpha 0.25:0.25:1 --space momentum");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][9] == "CLAMPED");
    CHECK(std::stod(rows[1][6]) > 10.0);  // near-threshold blow-up
}

TEST_CASE("entropy: worker count does not change the bytes") {
    const std::string args =
        "entropy --system ho --n 0..3 --alpha 0.05:10:60 --space both";
    const auto serial = run_cli(args);
    const auto parallel = run_cli(args + " --jobs 4");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(serial.output == parallel.output);
    CHECK(parse_csv(serial.output).size() == 1 + 4 * 2 * 60);
}

TEST_CASE("entropy: non-convergable request exits with code 3") {
    const auto r = run_cli(
        "entropy --system neumann --alpha 0.5002:0.5002:1 --space momentum");
    CHECK(r.exit_code == 3);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][9] == "NONCONV");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("entropy --system nosuch").exit_code == 2);
    CHECK(run_cli("entropy --alpha 1:2").exit_code == 2);
    CHECK(run_cli("entropy --alpha 2:1:5").exit_code == 2);
    CHECK(run_cli("entropy --kind nosuch").exit_code == 2);
    CHECK(run_cli("verify nosuch").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("uncertainty: ground-state sum saturates the bound") {
    const auto r =
        run_cli("uncertainty --system ho --n 0 --alpha 0.8:0.8:1");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 4);  // sum, bound, gap
    CHECK(rows[1][3] == "renyi-sum");
    CHECK(rows[2][3] == "bound");
    CHECK(rows[3][3] == "gap");
    CHECK(rows[3][9] == "SATURATED");
    CHECK(std::stod(rows[1][6]) ==
          doctest::Approx(std::stod(rows[2][6])).epsilon(1e-9));
}

TEST_CASE("uncertainty: maximum search") {
    const auto r = run_cli("uncertainty --system q1d --n 1 --find-max");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][3] == "sum-max");
    CHECK(std::stod(rows[1][4]) == doctest::Approx(4.5436).epsilon(1e-3));
    CHECK(std::stod(rows[1][6]) ==
          doctest::Approx(2.52734909321).epsilon(1e-6));
    const auto unb = run_cli("uncertainty --system robin --find-max");
    CHECK(parse_csv(unb.output)[1][9] == "UNBOUNDED");
}

TEST_CASE("tsallis-check at the limiting order") {
    const auto r =
        run_cli("tsallis-check --system dirichlet --n 1 --alpha 0.5:0.5:1");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 4);
    CHECK(std::stod(rows[1][6]) ==
          doctest::Approx(0.35917424425).epsilon(1e-6));
    CHECK(rows[3][9] == "SATURATED");
}

TEST_CASE("conjecture: eight-point flat-well trace lands near the target") {
    const auto r = run_cli("conjecture --system neumann --points 8");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    double extrapolated = 0.0;
    bool found = false;
    for (const auto& row : rows)
        if (row.size() == 10 && row[3] == "extrapolated-sum") {
            extrapolated = std::stod(row[6]);
            found = true;
        }
    REQUIRE(found);
    CHECK(std::fabs(extrapolated - std::log(8.0 * std::atan(1.0))) < 0.01);
}

TEST_CASE("thermo equilibrium with cutoff") {
    const auto r =
        run_cli("thermo equilibrium --levels 0,1 --temperature 1 --alpha 2");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 4);  // two probabilities + partition
    CHECK(rows[1][6] == "1");
    CHECK(rows[2][6] == "0");
    CHECK(rows[1][9] == "CUTOFF");
}

TEST_CASE("verify: acceptance suites run clean through the tool") {
    const auto r = run_cli("verify thermo");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS]") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("json mirror carries metadata and rows") {
    const auto r = run_cli(
        "entropy --system ho --n 0 --alpha 2:2:1 --space position "
        "--format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"tool\": \"qentropy\"") != std::string::npos);
    CHECK(r.output.find("\"rel_tol\"") != std::string::npos);
    CHECK(r.output.find("\"path\": \"closed\"") != std::string::npos);
}

TEST_CASE("environment tolerance override is honored") {
    const auto r = run_cli(
        "entropy --system dirichlet --n 1 --kind shannon --space momentum",
        "QENTROPY_REL_TOL=1e-4");
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][6]) ==
          doctest::Approx(2.51889090708).epsilon(5e-4));
    // the looser request must report a larger error estimate than the
    // library default
    const auto tight = run_cli(
        "entropy --system dirichlet --n 1 --kind shannon --space momentum "
        "--rel-tol 1e-10");
    CHECK(std::stod(parse_csv(tight.output)[1][8]) <
          std::stod(rows[1][8]));
}

TEST_CASE("output lands in the requested file") {
    const std::string path = "/tmp/qentropy_cli_out.csv";
    std::remove(path.c_str());
    const auto r = run_cli(
        "entropy --system robin --alpha 2:2:1 --space position --out " +
        path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char line[256] = {};
    REQUIRE(std::fgets(line, sizeof line, f) != nullptr);
    CHECK(std::string(line).rfind("system,n,space", 0) == 0);
    std::fclose(f);
    std::remove(path.c_str());
}


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string run_cli(const std::string& args, int* exit_code) {
    std::string cmd = std::string(REESKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string golden_path(const std::string& name) {
    return std::string(REESKIT_GOLDEN_DIR) + "/" + name;
}

std::string input_arg(const std::string& name) {
    return "--input " + golden_path("inputs/" + name);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_against_golden(const std::string& args, const std::string& golden_name) {
    int code = -1;
    std::string out = run_cli(args, &code);
    CHECK(code == 0);
    CHECK(out == read_file(golden_path(golden_name)));
}

}  // namespace

TEST_CASE("package outputs match the golden files") {
    check_against_golden("package " + input_arg("mon_example.json"), "package_mon.json");
    check_against_golden("package " + input_arg("mon_example.json") + " --format text",
                         "package_mon.txt");
    check_against_golden("package " + input_arg("mon_example.json") + " --format latex",
                         "package_mon.tex");
    check_against_golden("package " + input_arg("det_example.json"), "package_det.json");
    check_against_golden("package " + input_arg("hankel_example.json") + " --format text",
                         "package_hankel.txt");
}

TEST_CASE("rational power outputs match the golden files") {
    check_against_golden("ratpow " + input_arg("mon_example.json") + " --w 3/2 --generators",
                         "ratpow_mon.json");
    check_against_golden("ratpow " + input_arg("det_example.json") + " --w 1 --generators",
                         "ratpow_det.json");
}

TEST_CASE("join, star, and summation outputs match the golden files") {
    check_against_golden("join " + input_arg("join_example.json") + " --format text",
                         "join.txt");
    check_against_golden("star " + input_arg("star_example.json"), "star.json");
    check_against_golden("sum-check " + input_arg("cool_example.json") + " --w 3/2",
                         "sumcheck_cool.json");
    check_against_golden("counterexample --n 1", "counterexample_1.json");
    check_against_golden("sandwich " + input_arg("dvr_pair.json") + " --w 1 --tau 1/2",
                         "sandwich_dvr.json");
    check_against_golden("resurgence --m 3 --t 2", "resurgence.json");
}

TEST_CASE("output is byte-identical across runs") {
    int a = -1, b = -1;
    std::string first = run_cli("sum-check " + input_arg("cool_example.json") + " --w 3/2", &a);
    std::string second = run_cli("sum-check " + input_arg("cool_example.json") + " --w 3/2", &b);
    CHECK(a == 0);
    CHECK(first == second);
}

TEST_CASE("oracle cross-check flag succeeds on the examples") {
    int code = -1;
    run_cli("package " + input_arg("mon_example.json") + " --oracle", &code);
    CHECK(code == 0);
    run_cli("join " + input_arg("join_example.json") + " --oracle", &code);
    CHECK(code == 0);
    run_cli("ratpow " + input_arg("det_example.json") + " --w 1 --member 2,1", &code);
    CHECK(code == 0);
}

TEST_CASE("exit codes distinguish input errors and caps") {
    int code = -1;
    std::string tmp = golden_path("inputs/mon_example.json");
    run_cli("package --input /nonexistent.json", &code);
    CHECK(code == 2);

    std::string bad = "/tmp/reeskit_bad_input.json";
    {
        std::ofstream out(bad);
        out << "{\"semigroup\": [";
    }
    run_cli("package --input " + bad, &code);
    CHECK(code == 2);

    run_cli("ratpow --input " + tmp + " --w 40 --generators --cap 50", &code);
    CHECK(code == 3);

    run_cli("ratpow --input " + tmp + " --w -1 --generators", &code);
    CHECK(code == 2);
}

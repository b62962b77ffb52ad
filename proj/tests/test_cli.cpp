#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "jetgroups/io.hpp"
#include "jetgroups/jet.hpp"
#include "jetgroups/random.hpp"
#include "jetgroups/tangent.hpp"

using namespace jetgroups;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(JETGROUPS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("partitions subcommands") {
    const RunResult list = run("partitions list --n 3");
    CHECK(list.exit_code == 0);
    for (const char* p : {"\"1|2|3\"", "\"12|3\"", "\"2|13\"", "\"1|23\"", "\"123\""})
        CHECK(list.output.find(p) != std::string::npos);

    CHECK(run("partitions count --sizes 1,2").output == "2\n");
    CHECK(run("partitions count --sizes 1,1,2").output == "3\n");
    CHECK(run("partitions list --n 0").exit_code == 2);
    CHECK(run("partitions list --n 3 --sizes 1,1").exit_code == 2);
}

TEST_CASE("jet mul echoes the first operand when the second is the identity") {
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    Lcg rng(401);
    const JetElement x = random_jet(a, 3, Side::right, rng);
    write_file("cli_a.json", jet_to_json(x));
    write_file("cli_e.json", jet_to_json(JetElement::identity(a, 3, Side::right)));

    const RunResult r = run("jet mul --algebra sl2 --k 3 cli_a.json cli_e.json");
    CHECK(r.exit_code == 0);
    CHECK(parse_jet_json(r.output, a) == x);

    // emitted files re-parse to the computed product
    write_file("cli_b.json", jet_to_json(random_jet(a, 3, Side::right, rng)));
    const RunResult prod = run("jet mul --algebra sl2 cli_a.json cli_b.json");
    CHECK(prod.exit_code == 0);
    const JetElement b = parse_jet_json(read_file("cli_b.json"), a);
    CHECK(parse_jet_json(prod.output, a) == jet_multiply(x, b));

    const RunResult inv = run("jet inv --algebra sl2 cli_a.json");
    CHECK(inv.exit_code == 0);
    CHECK(parse_jet_json(inv.output, a) == jet_inverse(x));

    std::remove("cli_a.json");
    std::remove("cli_b.json");
    std::remove("cli_e.json");
}

TEST_CASE("jet pure through the CLI") {
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    Lcg rng(409);
    const AlgebraElement x = random_element(a, rng);
    const AlgebraElement y = random_element(a, rng);
    write_file("cli_x.json", element_to_json(x));
    write_file("cli_y.json", element_to_json(y));
    const RunResult r = run("jet pure --algebra sl2 --i 1 --j 2 --k 4 cli_x.json cli_y.json");
    CHECK(r.exit_code == 0);
    CHECK(parse_jet_json(r.output, a) == pure_product(a, 4, 1, x, 2, y));
    std::remove("cli_x.json");
    std::remove("cli_y.json");
}

TEST_CASE("tangent subcommands round-trip") {
    const AlgebraPtr a = AlgebraSpec::builtin("heis3");
    Lcg rng(419);
    const JetElement j = random_jet(a, 3, Side::right, rng);
    write_file("cli_j.json", jet_to_json(j));

    const RunResult embedded = run("tangent embed --algebra heis3 cli_j.json");
    CHECK(embedded.exit_code == 0);
    CHECK(parse_tangent_json(embedded.output, a) == embed_jet(j));

    write_file("cli_t.json", embedded.output);
    const RunResult projected = run("tangent project --algebra heis3 cli_t.json");
    CHECK(projected.exit_code == 0);
    CHECK(parse_jet_json(projected.output, a) == j);

    const RunResult permuted = run("tangent permute --algebra heis3 --sigma 2,1,3 cli_t.json");
    CHECK(permuted.exit_code == 0);
    CHECK(parse_tangent_json(permuted.output, a) ==
          permute(Permutation({2, 1, 3}), embed_jet(j)));

    const RunResult inv = run("tangent inv --algebra heis3 cli_t.json");
    CHECK(inv.exit_code == 0);
    CHECK(parse_tangent_json(inv.output, a) == tangent_inverse(embed_jet(j)));

    std::remove("cli_j.json");
    std::remove("cli_t.json");
}

TEST_CASE("cocycle subcommands") {
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    Lcg rng(421);
    const JetElement x = random_jet(a, 1, Side::right, rng);
    const JetElement y = random_jet(a, 1, Side::right, rng);
    write_file("cli_cx.json", jet_to_json(x));
    write_file("cli_cy.json", jet_to_json(y));
    const RunResult r = run("cocycle group --algebra sl2 --k 2 cli_cx.json cli_cy.json");
    CHECK(r.exit_code == 0);
    CHECK(parse_element_json(r.output, a) == group_cocycle(2, x, y));
    std::remove("cli_cx.json");
    std::remove("cli_cy.json");
}

TEST_CASE("identical command and seed give byte-identical output") {
    const RunResult a = run("check cocycles --algebra sl2 --k 3 --trials 5 --seed 9");
    const RunResult b = run("check cocycles --algebra sl2 --k 3 --trials 5 --seed 9");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("check subcommands exit zero on success") {
    CHECK(run("check partitions").exit_code == 0);
    CHECK(run("check oracle --algebra sl2 --k 3 --trials 5 --seed 7").exit_code == 0);
    CHECK(run("check group-axioms --algebra leibniz2 --k 3 --trials 5 --seed 7").exit_code == 0);
}

TEST_CASE("malformed invocations exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("jet mul --algebra sl2 only_one_file.json").exit_code == 2);
    CHECK(run("jet mul --algebra no_such_algebra a.json b.json").exit_code == 2);
    CHECK(run("partitions count").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("JETGROUPS_MAX_K lowers the order caps") {
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    Lcg rng(431);
    write_file("cli_k3.json", jet_to_json(random_jet(a, 3, Side::right, rng)));
    write_file("cli_k3b.json", jet_to_json(random_jet(a, 3, Side::right, rng)));

    const std::string cmd = "jet mul --algebra sl2 cli_k3.json cli_k3b.json";
    CHECK(run(cmd).exit_code == 0);
    const std::string lowered = std::string("JETGROUPS_MAX_K=2 ") + JETGROUPS_CLI_PATH + " " +
                                cmd + " >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(lowered.c_str())) == 2);

    std::remove("cli_k3.json");
    std::remove("cli_k3b.json");
}

TEST_CASE("help exits zero") {
    CHECK(run("--help").exit_code == 0);
}

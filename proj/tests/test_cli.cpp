#include <doctest.h>

#include <fstream>

#include "support/schema_check.hpp"
#include "support/subprocess.hpp"
#include "umbral/output.hpp"

using namespace umbral;
using testing::cli_path;
using testing::run_command;

namespace {

testing::SchemaChecker load_schema() {
    std::ifstream in(testing::schema_path());
    REQUIRE(in.good());
    return testing::SchemaChecker(nlohmann::json::parse(in));
}

}  // namespace

TEST_CASE("cli poly: list form and exit codes") {
    auto r = run_command(cli_path() + " poly bernoulli --order 2 --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[-1, 1]\n");

    r = run_command(cli_path() + " poly euler --order 0 --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[0, 0, 0, 1]\n");

    r = run_command(cli_path() + " poly frobenius-euler --order 1 --n 1 --lambda -1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[-1/2, 1]\n");

    r = run_command(cli_path() + " poly bernoulli --order 2 --n 2 --pretty");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x^2 - 2*x + 5/6\n");
}

TEST_CASE("cli poly: flag errors exit 2") {
    CHECK(run_command(cli_path() + " poly frobenius-euler --order 1 --n 1").exit_code == 2);
    CHECK(run_command(cli_path() + " poly bernoulli --n 1 --lambda 2").exit_code == 2);
    CHECK(run_command(cli_path() + " poly quux --n 1").exit_code == 2);
    CHECK(run_command(cli_path() + " poly bernoulli").exit_code == 2);
    CHECK(run_command(cli_path() + " poly bernoulli --order x --n 1").exit_code == 2);
    CHECK(run_command(cli_path() + " poly frobenius-euler --order 1 --n 1 --lambda 1").exit_code == 2);
    CHECK(run_command(cli_path() + " nonsense").exit_code == 2);
}

TEST_CASE("cli sums: tables match the worked examples") {
    auto r = run_command(cli_path() + " sums plain --n 2 --m 2 --k 0..2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "S_0^(2)(2) = 4\nS_1^(2)(2) = 12\nS_2^(2)(2) = 38\n");

    r = run_command(cli_path() + " sums alt --n 1 --m 3 --k 1..1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "T_1^(1)(3) = -2\n");

    r = run_command(cli_path() + " sums plain --n 3 --m 1 --k 0..3 --algorithm enum");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "S_0^(3)(1) = 1\nS_1^(3)(1) = 3\nS_2^(3)(1) = 9\nS_3^(3)(1) = 27\n");

    r = run_command(cli_path() + " sums lambda --n 1 --m 2 --k 0..0 --lambda 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "S_0^(1)(2|2) = 3/4\n");

    CHECK(run_command(cli_path() + " sums lambda --n 1 --m 2 --k 0..0").exit_code == 2);
    CHECK(run_command(cli_path() + " sums lambda --n 1 --m 2 --k 0..0 --lambda 0").exit_code == 2);
    CHECK(run_command(cli_path() + " sums plain --n 1 --m 2 --k 2..1").exit_code == 2);
    CHECK(run_command(cli_path() + " sums plain --n 1 --m 2 --k x..1").exit_code == 2);
}

TEST_CASE("cli verify: exit code contract") {
    CHECK(run_command(cli_path() + " verify thm3 --n-max 4 --m-max 3").exit_code == 0);
    // demonstration mode: mismatches of the printed variant do not fail
    auto printed = run_command(cli_path() + " verify thm4-printed --n-max 2 --m-max 1");
    CHECK(printed.exit_code == 0);
    CHECK(printed.output.find("MISMATCH") != std::string::npos);
    // unless strict equality is demanded
    CHECK(run_command(cli_path() + " verify thm4-printed --n-max 2 --m-max 1 --expect equal")
              .exit_code == 1);
    CHECK(run_command(cli_path() + " verify all --n-max 1 --m-max 1 --lambda 2").exit_code == 0);
    CHECK(run_command(cli_path() + " verify thm9 --n-max 1").exit_code == 2);
}

TEST_CASE("cli verify: skipped rows are reported") {
    auto r = run_command(cli_path() + " verify thm6 --n-max 1 --m-max 2 --lambda -1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("skipped") != std::string::npos);
}

TEST_CASE("cli verify: repeated --lambda flags sweep all values, canonically ordered") {
    const auto r =
        run_command(cli_path() + " verify thm6 --n-max 1 --m-max 1 --lambda 2 --lambda -1 --format csv");
    CHECK(r.exit_code == 0);
    // n = 1: both sides are H_0^(1)(x|lambda) = 1; lambdas sweep in sorted order
    CHECK(r.output == "identity,n,m,lambda,alpha,trunc,status,first_mismatch_degree,reason,lhs,rhs\n"
                      "Thm6,1,1,-1,,4,equal,,,[1],[1]\n"
                      "Thm6,1,1,2,,4,equal,,,[1],[1]\n");
}

TEST_CASE("cli determinism: identical runs and jobs-invariance") {
    const std::string base = cli_path() + " verify all --n-max 2 --m-max 2 --format json";
    const auto first = run_command(base);
    const auto second = run_command(base);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const auto jobs1 = run_command(base + " --jobs 1");
    const auto jobs4 = run_command(base + " --jobs 4");
    CHECK(jobs1.output == first.output);
    CHECK(jobs4.output == first.output);

    // the environment default for --jobs must not leak into the payload
    const auto env_jobs = run_command("UMBRAL_JOBS=3 " + base);
    CHECK(env_jobs.output == first.output);
}

TEST_CASE("cli misc: help exits 0, trunc override lands in the report") {
    CHECK(run_command(cli_path() + " --help").exit_code == 0);
    CHECK(run_command(cli_path() + " verify --help").exit_code == 0);
    const auto r = run_command(cli_path() + " verify thm3 --n-max 2 --m-max 1 --trunc 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("trunc=12") != std::string::npos);
    // an override too small to be exact is a usage error, not a silent clamp
    CHECK(run_command(cli_path() + " sums plain --n 2 --m 2 --k 0..4 --trunc 2").exit_code == 2);
    CHECK(run_command(cli_path() + " verify eq16 --n-max 5 --m-max 1 --trunc 3").exit_code == 2);
}

TEST_CASE("cli json outputs validate against the shipped schema and round-trip") {
    const auto schema = load_schema();
    const std::vector<std::string> commands{
        " poly bernoulli --order 2 --n 3 --format json",
        " poly frobenius-euler --order 1 --n 2 --lambda -2/3 --scale 2 --format json",
        " sums plain --n 2 --m 2 --k 0..4 --format json",
        " sums lambda --n 2 --m 3 --k 0..3 --lambda 1/2 --algorithm enum --format json",
        " verify all --n-max 2 --m-max 2 --format json",
        " verify thm4-printed --n-max 2 --m-max 2 --format json",
        " verify lemma1 --n-max 3 --m-max 2 --alpha 2 --format json",
    };
    for (const auto& command : commands) {
        CAPTURE(command);
        const auto r = run_command(cli_path() + command);
        CHECK(r.exit_code == 0);
        const auto parsed = nlohmann::json::parse(r.output);
        CHECK(schema.validate(parsed));
        // structural round-trip
        const OutputRecord record = output_record_from_json(Json::parse(r.output));
        CHECK(render_json(record) == r.output);
    }
}

TEST_CASE("cli csv is stable and parseable-looking") {
    const auto r = run_command(cli_path() + " sums plain --n 2 --m 2 --k 0..2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "family,k,n,m,lambda,algorithm,value\n"
                      "plain,0,2,2,,series,4\n"
                      "plain,1,2,2,,series,12\n"
                      "plain,2,2,2,,series,38\n");
}

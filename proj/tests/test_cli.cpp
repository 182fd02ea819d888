#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace cli = diffrad::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("diffrad-test-" + name);
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST_CASE("radical subcommand") {
    const Run r = run({"radical", "z^2*(z-1)*(z-2)^3"});
    CHECK(r.code == cli::kVerified);
    CHECK(r.out.find("z^4 - 6*z^3 + 12*z^2 - 8*z") != std::string::npos);

    const Run j = run({"--json", "radical", "--factored", "1; (0,2), (1,1), (2,3)", "--oracle", "--m", "3"});
    REQUIRE(j.code == cli::kVerified);
    const json parsed = json::parse(j.out);
    for (const char* key : {"command", "session", "hypotheses", "lhs", "rhs", "holds", "artifacts"}) {
        CHECK_MESSAGE(parsed.contains(key), key);
    }
    CHECK(parsed["command"] == "radical");
    CHECK(parsed["session"]["kappa"] == "1");
}

TEST_CASE("exit codes") {
    CHECK(run({"mason", "z*(z+1)", "-(z+2)*(z+3)", "-4*z-6"}).code == cli::kVerified);
    CHECK(run({"mason", "z", "z+1", "z+2"}).code == cli::kHypothesesUnmet);
    CHECK(run({"--coprimality", "pairwise", "mason", "--multi", "z", "z^2", "1", "z^2+z+1"}).code ==
          cli::kHypothesesUnmet);
    CHECK(run({"mason", "--multi", "z", "z^2", "1", "z^2+z+1"}).code == cli::kVerified);
    CHECK(run({"fermat", "--n", "2", "z^2", "-(i/2)*(sqrt(2)*z^2+2*z-sqrt(2))", "-(1/2)*(sqrt(2)*z^2-2*z-sqrt(2))"})
              .code == cli::kVerified);
    CHECK(run({"fermat", "--n", "2", "--form", "sum", "z^2", "-(i/2)*(sqrt(2)*z^2+2*z-sqrt(2))",
               "-(1/2)*(sqrt(2)*z^2-2*z-sqrt(2))"})
              .code == cli::kVerified);
    CHECK(run({"fermat", "--n", "3", "z^2", "z", "z+1"}).code == cli::kHypothesesUnmet);
    CHECK(run({"divisor", "--factored", "1; (0,1)", "--truncation", "--q", "2", "--n", "5"}).code == cli::kVerified);
    CHECK(run({"divisor", "--factored", "1; (0,2)", "--factored", "1; (-2,2)", "--ord"}).code == cli::kVerified);

    const Run bad = run({"radical", "z^"});
    CHECK(bad.code == cli::kUsageError);
    CHECK(bad.err.find("SyntaxError") != std::string::npos);
    CHECK(run({"radical", "z", "--m", "1"}).code == cli::kUsageError);
    CHECK(run({"--kappa", "0", "radical", "z"}).code == cli::kUsageError);
    CHECK(run({"--adjoin", "4", "radical", "z"}).code == cli::kUsageError);
    CHECK(run({"--coprimality", "sometimes", "mason", "z", "1", "z+1"}).code == cli::kUsageError);
    CHECK(run({"nonsense"}).code == cli::kUsageError);
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"--help"}).code == cli::kVerified);
}

TEST_CASE("tower and shift options") {
    CHECK(run({"--adjoin", "5", "radical", "z^2 - 5"}).code == cli::kVerified);
    CHECK(run({"radical", "z^2 - sqrt(5)"}).code == cli::kUsageError);
    const Run r = run({"--json", "--kappa", "i", "mason", "z", "z+i", "2*z+i"});
    const json j = json::parse(r.out);
    CHECK(j["session"]["kappa"] == "i");
    CHECK(j["holds"].is_boolean());
}

TEST_CASE("file input") {
    const auto polys = temp_file("mason.txt", "# a, b, c\nz*(z+1)\n-(z+2)*(z+3)  # second\n\n-4*z-6\n");
    CHECK(run({"mason", "--file", polys.string()}).code == cli::kVerified);
    const auto div = temp_file("divisor.txt", "(0, 2)\n(1, 1)\n(2, 3)\n");
    const Run r = run({"--json", "divisor", "--file", div.string(), "--radii", "1,2,3"});
    CHECK(r.code == cli::kVerified);
    CHECK(run({"mason", "--file", "/nonexistent/diffrad"}).code == cli::kUsageError);
    std::filesystem::remove(polys);
    std::filesystem::remove(div);
}

TEST_CASE("worked-example replay") {
    const Run plain = run({"paper-examples"});
    CHECK(plain.code == cli::kVerified);
    CHECK(plain.out.find("6/6 fixtures reproduced") != std::string::npos);

    const Run parallel = run({"--jobs", "4", "paper-examples"});
    CHECK(parallel.code == cli::kVerified);
    CHECK(parallel.out == plain.out);

    const json j = json::parse(run({"--json", "paper-examples"}).out);
    CHECK(j["holds"] == true);
    CHECK(j["hypotheses"].size() == cli::fixture_names().size());

    cli::Expected tampered = cli::expected_fixture_values();
    tampered["mason-triple-sharp"]["rhs"] = "3";
    const auto path = temp_file("expected.json", json(tampered).dump());
    const Run t = run({"paper-examples", "--expected", path.string()});
    CHECK(t.code == cli::kViolation);
    CHECK(t.out.find("FAIL mason-triple-sharp") != std::string::npos);
    CHECK(t.out.find("rhs: expected 3, got 2") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"--seed", "7", "divisor", "--factored", "2; (0,2), (i,1)", "--radii", "1,2"};
    CHECK(run(args).out == run(args).out);
}

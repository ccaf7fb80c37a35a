#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "semicore");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = semicore::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = std::string(P_tmpdir) + "/semicore_test_" + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sgp info") {
    const Result r = call({"sgp", "info", "--gens", "4,11,13", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["conductor"] == 19);
    CHECK(j["frobenius"] == 18);
    CHECK(j["multiplicity"] == 4);
    CHECK(j["minimal_generators"] == std::vector<int>{4, 11, 13});
    CHECK(j["gaps"].size() == 10);
    CHECK(call({"sgp", "info", "--gens", "4,6"}).code == 64);
}

TEST_CASE("core basis from a file and from generators") {
    const std::string path = write_temp("core.json", R"({"field": "Q", "c0": 4, "generators": ["t^2 + t^3"]})");
    const Result r = call({"core", "basis", "--core", path, "--max-deg", "8", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["attained_degrees"] == std::vector<int>{0, 3, 4, 5, 6, 7, 8});
    CHECK(j["semigroup_ring"] == false);
    CHECK(call({"core", "basis", "--gens", "2,5"}).code == 0);
    CHECK(call({"core", "basis", "--gens", "2,5", "--core", path}).code == 64);
    CHECK(call({"core", "basis", "--core", path, "--field", "Fp:2"}).code == 64);
    const std::string broken = write_temp("broken.json", R"({"field": "Q", "c0": 4, "extra": 1})");
    CHECK(call({"core", "basis", "--core", broken}).code == 64);
    CHECK(call({"core", "basis", "--core", "/nonexistent/core.json"}).code == 64);
}

TEST_CASE("ideal subcommands") {
    const std::string gf2 = write_temp("gf2.json", R"({"field": "Fp:2", "c0": 10, "generators": []})");
    Result r = call({"ideal", "twogen", "--core", gf2, "--f", "1 + t^2 + t^3 + t^5 + t^6", "--c", "10", "--ell", "10",
                     "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["generators"][1] == "1 + t^10 + t^13");
    CHECK(j["mu_upper_bound"] == 2);

    r = call({"ideal", "point", "--gens", "3,5,7", "--alpha", "1", "--json"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["generators"] == std::vector<std::string>{"1 - t^3", "1 - t^5"});

    r = call({"ideal", "monomial", "--gens", "4,11,13", "--q", "12", "--json"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["generators"] == std::vector<std::string>{"t^12", "t^13", "t^15", "t^22"});

    r = call({"ideal", "closure", "--gens", "4,11,13", "--q", "12", "--json"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["generators"] == std::vector<std::string>{"t^12 - t^13", "t^13 - t^26", "t^15 - t^28", "t^22 - t^35"});
    CHECK(call({"ideal", "closure", "--gens", "4,11,13", "--q", "12", "--f", "1 + t"}).code == 0);

    CHECK(call({"ideal", "twogen", "--gens", "2,5", "--f", "t^-1"}).code == 64);
    CHECK(call({"ideal", "twogen", "--gens", "2,5", "--f", "2 + t"}).code == 64);
    CHECK(call({"ideal", "twogen", "--gens", "2,5"}).code == 64);
    CHECK(call({"ideal"}).code == 64);
    CHECK(call({}).code == 64);
    CHECK(call({"bogus"}).code == 64);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("verify equality exit codes") {
    const std::string h = write_temp("h4.json", R"({"semigroup": [4, 11, 13]})");
    const std::string gens = "t^12 - t^13; t^13 - t^26; t^15 - t^28; t^22 - t^35";
    Result r = call({"verify", "equality", "--core", h, "--phi", "t^12 - t^13", "--gens", gens, "--max-deg", "60"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Proven", 0) == 0);
    r = call({"verify", "equality", "--core", h, "--phi", "t^12 - t^13", "--gens", "t^12; t^13 + t^14; t^15; t^22",
              "--json"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["witness"].is_string());
    r = call({"verify", "equality", "--core", h, "--phi", "t^12 - t^13", "--gens", gens, "--max-deg", "36"});
    CHECK(r.code == 2);
    r = call({"verify", "equality", "--semigroup", "3,5,7", "--phi", "1 - t", "--gens", "1 - t^3; 1 - t^5"});
    CHECK(r.code == 0);
    CHECK(call({"verify", "equality", "--phi", "1 - t", "--gens", "1 - t^3"}).code == 64);
}

TEST_CASE("spectra check") {
    const Result r = call({"spectra", "check", "--gens", "3,5,7", "--field", "Fp:2", "--max-irr-deg", "3", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["points"].size() == 5);
    CHECK(call({"spectra", "check", "--gens", "3,5,7"}).code == 64);
}

TEST_CASE("paper reproduce") {
    Result r = call({"paper", "reproduce", "--only", "ex4.8", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["examples"].size() == 1);
    CHECK(j["examples"][0]["verdict"] == "PASS");
    r = call({"paper", "reproduce", "--jobs", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("10/10 passed") != std::string::npos);
    CHECK(call({"paper", "reproduce", "--only", "nope"}).code == 1);
}

}

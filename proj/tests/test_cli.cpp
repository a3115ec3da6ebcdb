#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hecke/cli.hpp"

using nlohmann::json;

namespace {

struct Result
{
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args)
{
    args.insert(args.begin(), "hecke");
    std::vector<const char*> argv;
    for (auto const& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = hecke::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hurwitz")
{
    auto r = call({"hurwitz", "--D", "23"});
    CHECK(r.code == 0);
    CHECK(r.out == "23,3,1\n");
    CHECK(call({"hurwitz", "--D", "23", "--direct"}).out == "23,3,1\n");
    auto t = call({"hurwitz", "--D-max", "8"});
    CHECK(t.out == "D,H_numerator,H_denominator\n3,1,3\n4,1,2\n7,1,1\n8,1,1\n");
    CHECK(call({"hurwitz", "--D", "5"}).code == 2);
}

TEST_CASE("trace")
{
    auto r = call({"trace", "--k", "12", "--N", "1", "--m", "2", "--breakdown"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["total"] == "-24/1");
    CHECK(j["A4"] == "0/1");
    CHECK(j.contains("A1"));
    auto plain = json::parse(call({"trace", "--k", "2", "--N", "11", "--m", "3"}).out);
    CHECK(plain["total"] == "-1/1");
    CHECK_FALSE(plain.contains("A1"));
    auto cyc = json::parse(call({"trace", "--k", "2", "--N", "13", "--chi", "exps=2", "--m", "2"}).out);
    CHECK(cyc["total"]["zeta_order"] == 6);
    CHECK(cyc["total"]["coefficients"].size() == 2);
    CHECK(call({"trace", "--k", "2", "--N", "13", "--chi", "bogus", "--m", "2"}).code == 2);
    CHECK(call({"trace", "--k", "2", "--N", "11", "--m", "22"}).code == 2);
}

TEST_CASE("rtf-verify")
{
    auto r = call({"rtf-verify", "--q", "2", "--k", "12", "--N", "1", "--order", "10"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["order"] == 10);
    CHECK(j["pass"].size() == 11);
    for (auto const& p : j["pass"])
        CHECK(p == true);
    CHECK(j["first_fail"].is_null());
    CHECK(j["a3_convention"] == "shifted");

    auto u = call({"rtf-verify", "--q", "2", "--k", "12", "--order", "4", "--a3", "unshifted"});
    CHECK(u.code == 1);
    auto ju = json::parse(u.out);
    CHECK(ju["first_fail"] == 0);
    CHECK(ju["failures"][0].contains("difference"));
}

TEST_CASE("moments")
{
    auto r = call({"moments", "--q", "2", "--k", "2", "--nu-max", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("nu,A_value_num,A_value_den,normalized_float\n0,7,6,", 0) == 0);
    CHECK(r.out.find("\n1,4,1,") != std::string::npos);
}

TEST_CASE("equidist, bounds and mass-check")
{
    auto j = json::parse(call({"equidist", "--q", "2", "--nu", "6,8", "--grid", "4"}).out);
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["cells"].size() == 4);
    auto c = call({"equidist", "--q", "2", "--nu", "6", "--grid", "4", "--csv"});
    CHECK(c.out.rfind("nu,alpha,beta,empirical,semicircle,difference\n6,-1/1,-1/2,", 0) == 0);
    CHECK(call({"equidist", "--q", "2", "--csv", "--json"}).code == 2);

    auto b = call({"bounds", "--q", "3", "--n-max", "4", "--nu-max", "3"});
    CHECK(b.code == 0);
    CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 1 + 2 * 4);

    auto m = call({"mass-check", "--m-max", "100"});
    CHECK(m.code == 0);
    CHECK(m.out == "mass-check m<=100 failures=0 strict_mismatches=10\n");
    auto strict = call({"mass-check", "--m-max", "10", "--strict"});
    CHECK(strict.code == 1);
    CHECK(strict.out == "mismatch m=1 mass=7/6 expected=1/1\nmismatch m=4 mass=61/6 expected=10/1\n"
                        "mismatch m=9 mass=127/6 expected=21/1\nmass-check m<=10 failures=3\n");
}

TEST_CASE("selftest")
{
    auto r = call({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors and global options")
{
    CHECK(call({}).code == 2);
    CHECK(call({"nonsense"}).code == 2);
    CHECK(call({"trace", "--k", "2"}).code == 2);
    CHECK(call({"hurwitz", "--D", "23", "--bogus"}).code == 2);
    CHECK(call({"--help"}).code == 0);

    auto path = std::filesystem::temp_directory_path() / "hecke_cli_test.csv";
    auto r = call({"--output", path.string(), "hurwitz", "--D", "15"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "15,2,1");
    std::filesystem::remove(path);

    auto one = call({"--threads", "1", "bounds", "--q", "2", "--n-max", "4", "--nu-max", "9"});
    auto four = call({"--threads", "4", "bounds", "--q", "2", "--n-max", "4", "--nu-max", "9"});
    CHECK(one.out == four.out);
    CHECK(one.out == call({"bounds", "--q", "2", "--n-max", "4", "--nu-max", "9"}).out);
}

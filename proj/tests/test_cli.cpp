#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string("'") + JULIAREAL_CLI_PATH + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args)
{
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir()
{
    const fs::path dir = fs::temp_directory_path() / ("juliareal_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("classify")
    {
        const auto j = run_json("classify --poly '[0,3,0,-1]'");
        CHECK(j["report"]["julia_real"] == true);
        CHECK(j["report"]["branch"] == "odd-negative");
        const auto k = run_json("classify --poly '[0,2,0,-1]'");
        CHECK(k["report"]["julia_real"] == false);
        CHECK(k["report"]["interval"]["empty"] == true);
        const auto q = run_json("classify --poly '[\"-3\",0,1]'");
        CHECK(q["report"]["julia_real"] == true);
    }

    TEST_CASE("region writes CSV and PGM with a provenance line, deterministically")
    {
        const auto dir = scratch_dir();
        const std::string args = "region --a-range -6:1 --b-range -4:4 --step 0.25 --out '" + (dir / "r.csv").string() +
                                 "' --pgm '" + (dir / "r.pgm").string() + "'";
        const auto first = run(args);
        REQUIRE(first.code == 0);
        const auto j = nlohmann::json::parse(first.out);
        CHECK(j["disagreements_beyond_two_steps"] == 0);
        CHECK(j["cells"] == 29 * 33);
        const std::string csv = slurp(dir / "r.csv");
        CHECK(csv.rfind("# juliareal 0.1.0: juliareal region", 0) == 0);
        CHECK(csv.find("\nA,B,analytic,classifier,agree,boundary_distance\n") != std::string::npos);
        const std::string pgm = slurp(dir / "r.pgm");
        CHECK(pgm.rfind("P5\n# juliareal 0.1.0", 0) == 0);

        const auto second = run(args);
        CHECK(second.out == first.out);
        CHECK(slurp(dir / "r.csv") == csv);
        CHECK(slurp(dir / "r.pgm") == pgm);
        fs::remove_all(dir);
    }

    TEST_CASE("julia render")
    {
        const auto dir = scratch_dir();
        const auto j = run_json("julia --poly '[-2,0,1]' --window -2.5:2.5:-1:1 --width 512 --height 205 --out '" +
                                (dir / "j.pgm").string() + "'");
        CHECK(j["off_axis_not_escaped_pixels"] == 0);
        CHECK(j["not_escaped_pixels"].get<int>() > 0);
        const std::string pgm = slurp(dir / "j.pgm");
        CHECK(pgm.rfind("P5\n#", 0) == 0);
        CHECK(pgm.find("\n512 205\n255\n") != std::string::npos);
        CHECK(pgm.size() > 512u * 205u);
        fs::remove_all(dir);
    }

    TEST_CASE("equidist")
    {
        const auto j = run_json("equidist --poly '[-2,0,1]' --alpha 1/3 --levels 6,10 --reference arcsine");
        REQUIRE(j["levels"].size() == 2);
        CHECK(j["levels"][1]["points"] == 1024);
        CHECK(j["levels"][1]["ks_arcsine"].get<double>() < 0.05);
        CHECK(j["levels"][1]["has_nonreal"] == false);
        CHECK(run("equidist --poly '[-2,0,1]' --alpha 1/3 --reference normal").code == 2);
    }

    TEST_CASE("heights")
    {
        const auto j = run_json("heights --poly '[0,0,1]' --x 2 --depth 5");
        REQUIRE(j["table"].size() == 6);
        CHECK(j["table"][5]["estimate"].get<double>() == doctest::Approx(0.6931471805599453));
        CHECK(j["functional_equation_residual"] == 0.0);
    }

    TEST_CASE("lattes")
    {
        const auto j = run_json("lattes --curve 0,0,-2 --x0 2,3");
        CHECK(j["surjectivity"]["surjective"] == true);
        CHECK(j["critical_points"].size() == 2);
        CHECK(j["commutation"][0]["residual"].get<double>() <= 1e-14);
        const auto k = run_json("lattes --curve 0,-1,0");
        CHECK(k["surjectivity"]["surjective"] == false);
    }

    TEST_CASE("certify")
    {
        const auto j = run_json("certify --curve 0,0,-2 --alpha 1/3");
        CHECK(j["verdict"] == "certified");
        const auto k = run_json("certify --poly '[-1,0,1]' --alpha 1/3");
        CHECK(k["verdict"] == "not-certified");
        const auto m = run_json("certify --poly '[-1,0,1]' --alpha 1/3 --no-surjective");
        CHECK(m["verdict"] == "certified");
    }

    TEST_CASE("exit codes")
    {
        CHECK(run("").code == 2);
        CHECK(run("classify").code == 2);
        CHECK(run("classify --poly '[1,2'").code == 2);
        CHECK(run("region --a-range 1:0 --b-range -1:1").code == 2);
        CHECK(run("certify --alpha 1/3").code == 2);
        CHECK(run("certify --poly '[0,0,1]' --alpha 1/0").code == 2);
        // computational failure: alpha = 0 is exceptional for X^2
        CHECK(run("certify --poly '[0,0,1]' --alpha 0").code == 1);
        CHECK(run("classify --poly '[1,1]'").code == 1);
        CHECK(run("--version").code == 0);
    }
}

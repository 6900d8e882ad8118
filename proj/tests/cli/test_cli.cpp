#include "ratmod_cli/commands.hpp"
#include "ratmod_cli/report.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace ratmod::cli;

namespace {

std::string data(const std::string& file) { return std::string(RATMOD_DATA_DIR) + "/" + file; }

struct Run {
    int exit_code = -1;
    std::string out;
};

Run run_tool(const std::string& args)
{
    const std::string cmd = std::string(RATMOD_TOOL) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool mentions(const std::vector<std::string>& lines, const std::string& text)
{
    for (const auto& l : lines)
        if (l.find(text) != std::string::npos)
            return true;
    return false;
}

}  // namespace

TEST_CASE("report JSON round trip")
{
    Report r;
    r.command = "massey";
    r.arguments = {{"input", "a.toml"}, {"auto", "true"}};
    r.betti = {1, 0, 2};
    r.basis = {"1:0", "x:2"};
    r.ring = RingSummary{{"[1]", "[x]"}, {0, 2}, {{"[x]", "[x]", "0"}}};
    r.presentation_check = PresentationSummary{false, {"relation x^2 fails"}, {1, 0, 1}, {1, 0, 1}};
    r.massey.push_back({{"[x]", "[x]", "[x]"}, true, 5, "[y]", {"[y]"}, false, ""});
    r.violations = {"v"};
    r.hypotheses_assumed = {"h"};
    r.details = {"d"};
    const std::string text = dump(r);
    CHECK(parse_report(text) == r);
    CHECK(dump(parse_report(text)) == text);

    const Report empty;
    const auto j = nlohmann::json::parse(dump(empty));
    CHECK(j.at("ring").is_null());
    CHECK(j.at("presentation_check").is_null());
    CHECK(parse_report(dump(empty)) == empty);
    CHECK_THROWS(parse_report("{"));
}

TEST_CASE("exit codes")
{
    CHECK(exit_code(ratmod::ErrorKind::usage) == 1);
    CHECK(exit_code(ratmod::ErrorKind::axiom) == 2);
    CHECK(exit_code(ratmod::ErrorKind::internal) == 2);
    CHECK(exit_code(ratmod::ErrorKind::hypothesis) == 3);
}

TEST_CASE("commands")
{
    SUBCASE("verify and cohomology")
    {
        const Report v = run_verify({data("s3xs3.toml"), {}});
        CHECK(v.exit_code == 0);
        const Report c = run_cohomology({data("s3xs3.toml"), {}});
        CHECK(c.betti == std::vector<std::size_t>{1, 0, 0, 2, 0, 0, 1});
        REQUIRE(c.ring);
        CHECK(!c.ring->products.empty());
        const Report s = run_series({data("s2_model.toml"), 5});
        CHECK(s.betti == std::vector<std::size_t>{1, 0, 1, 0, 0, 0});
        const Report missing = run_verify({data("nope.toml"), {}});
        CHECK(missing.status == "usage");
        CHECK(missing.exit_code == 1);
    }
    SUBCASE("massey")
    {
        const Report m = run_massey({data("s4xs4.toml"), {}, true, {}});
        CHECK(m.exit_code == 0);
        CHECK(m.massey.empty());
        const Report bad = run_massey({data("s4xs4.toml"), {"[x]", "[x]"}, false, {}});
        CHECK(bad.exit_code == 1);
    }
    SUBCASE("quaternionic Hopf")
    {
        DiskBundleOptions o;
        o.base = data("s4.toml");
        o.euler = "x";
        o.rank = 4;
        o.massey = "auto";
        const Report r = run_conf2_disk_bundle(o);
        CHECK(r.exit_code == 0);
        CHECK(r.betti == std::vector<std::size_t>{1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1});
        REQUIRE(r.massey.size() == 1);
        CHECK(r.massey[0].degree == 11);
        CHECK(r.massey[0].nontrivial);
        CHECK(r.massey[0].indeterminacy.empty());
        o.truncate = true;
        CHECK(run_conf2_disk_bundle(o).betti == r.betti);
    }
    SUBCASE("trivial bundle presentation")
    {
        DiskBundleOptions o;
        o.base = data("s4.toml");
        o.euler = "0";
        o.rank = 4;
        o.check_presentation = data("presentation_s4xr4.toml");
        const Report r = run_conf2_disk_bundle(o);
        CHECK(r.betti == std::vector<std::size_t>{1, 0, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1});
        REQUIRE(r.presentation_check);
        CHECK(r.presentation_check->pass);
        o.check_presentation = data("presentation_s4xr4_wrong.toml");
        const Report w = run_conf2_disk_bundle(o);
        REQUIRE(w.presentation_check);
        CHECK(!w.presentation_check->pass);
        CHECK(mentions(w.presentation_check->violations, "degree 11"));
        CHECK(w.exit_code == 0);
    }
    SUBCASE("disk bundle hypotheses")
    {
        DiskBundleOptions o;
        o.base = data("s4.toml");
        o.euler = "x";
        o.rank = 2;
        CHECK(run_conf2_disk_bundle(o).exit_code == 3);
        o.rank = 4;
        o.euler = "[x";
        CHECK(run_conf2_disk_bundle(o).exit_code == 1);
    }
    SUBCASE("punctured manifolds")
    {
        for (int n : {4, 6, 8}) {
            const Report r = run_conf2_punctured({data("s" + std::to_string(n) + ".toml"), false, {}});
            std::vector<std::size_t> expect(n, 0);
            expect.front() = 1;
            expect.back() = 1;
            CHECK(r.betti == expect);
            CHECK(mentions(r.details, "kernel square commutes"));
        }
        const Report s = run_conf2_punctured({data("s3xs3.toml"), false, {}});
        CHECK(s.betti == std::vector<std::size_t>{1, 0, 0, 4, 0, 0, 3, 0, 2});
        const Report cp = run_conf2_punctured({data("cp2.toml"), false, {}});
        CHECK(cp.betti == std::vector<std::size_t>{1, 0, 2, 0, 0, 1});
        CHECK(mentions(cp.details, "P^1 = P^2 = 0: no"));
    }
    SUBCASE("pretty model and complements")
    {
        const Report p = run_conf2_pretty({data("s4.toml"), data("point.toml"), data("map_s4_point.toml"), false, {}});
        CHECK(p.betti == std::vector<std::size_t>{1, 0, 0, 1});
        const Report interior = run_complement({data("point.toml"), data("fiber_interior_point4.toml"), 4, 0, -1, {}});
        CHECK(interior.betti == std::vector<std::size_t>{1, 0, 0, 1});
        const Report boundary = run_complement({data("point.toml"), data("fiber_interior_point4.toml"), 4, 0, 2, {}});
        CHECK(boundary.betti == std::vector<std::size_t>{1});
    }
}

TEST_CASE("command-line tool")
{
    SUBCASE("Hopf bundle with Massey search")
    {
        const Run r = run_tool("conf2-disk-bundle --base " + data("s4.toml") + " --euler x --rank 4 --massey auto");
        CHECK(r.exit_code == 0);
        const Report rep = parse_report(r.out);
        CHECK(rep.betti == std::vector<std::size_t>{1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1});
        REQUIRE(rep.massey.size() == 1);
        CHECK(rep.massey[0].degree == 11);
    }
    SUBCASE("trivial bundle presentation")
    {
        const Run r = run_tool("conf2-disk-bundle --base " + data("s4.toml") + " --euler 0 --rank 4 --check-presentation " +
                               data("presentation_s4xr4.toml"));
        CHECK(r.exit_code == 0);
        const Report rep = parse_report(r.out);
        REQUIRE(rep.presentation_check);
        CHECK(rep.presentation_check->pass);
    }
    SUBCASE("punctured sphere")
    {
        const Run r = run_tool("conf2-punctured --manifold " + data("s4.toml"));
        CHECK(r.exit_code == 0);
        CHECK(parse_report(r.out).betti == std::vector<std::size_t>{1, 0, 0, 1});
    }
    SUBCASE("output file and options")
    {
        const auto path = std::filesystem::temp_directory_path() / "ratmod_cli_test.json";
        const Run r = run_tool("series " + data("s4.toml") + " --max-degree 6 -o " + path.string());
        CHECK(r.exit_code == 0);
        std::ifstream in(path);
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(parse_report(text).betti == std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 0});
        std::filesystem::remove(path);
        CHECK(run_tool("massey " + data("s4.toml")).exit_code == 1);
        CHECK(run_tool("frobnicate").exit_code == 1);
        CHECK(run_tool("verify " + data("missing.toml")).exit_code == 1);
        CHECK(run_tool("conf2-disk-bundle --base " + data("s4.toml") + " --euler x --rank 2").exit_code == 3);
        CHECK(run_tool("conf2-disk-bundle --base " + data("s4.toml") + " --euler x --rank 3").exit_code == 1);
    }
}

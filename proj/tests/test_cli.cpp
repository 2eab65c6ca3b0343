#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    json report;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "ehfmis_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out = work_dir() / "stdout.json";
    std::string cmd = std::string(EHFMIS_BIN) + " " + args + " > " + out.string() + " 2> " +
                      (work_dir() / "stderr.log").string();
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    json report;
    if (!ss.str().empty()) report = json::parse(ss.str(), nullptr, false);
    return {code, report};
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("solve exit codes on C5") {
    fs::path g = work_dir() / "c5.graph";
    write_file(g, "p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");

    auto found = run("solve --graph " + g.string() + " -k 2 --oracle");
    CHECK(found.exit_code == 0);
    CHECK(found.report["answer"] == "found");
    CHECK(found.report["verify"]["independent"] == true);
    CHECK(found.report["verify"]["size_ok"] == true);
    CHECK(found.report["oracle_agrees"] == true);
    CHECK(found.report["witness"].size() == 2);

    auto none = run("solve --graph " + g.string() + " -k 3 --oracle");
    CHECK(none.exit_code == 1);
    CHECK(none.report["answer"] == "none");
    CHECK(none.report["oracle_agrees"] == true);
}

TEST_CASE("solve rejects even holes under --verify-ehf") {
    fs::path g = work_dir() / "c4.graph";
    write_file(g, "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    auto r = run("solve --graph " + g.string() + " -k 2 --verify-ehf");
    CHECK(r.exit_code == 3);
    CHECK(r.report["answer"] == "precondition_violated");
    CHECK(r.report["even_hole"].size() == 4);
}

TEST_CASE("parse errors exit with 2") {
    fs::path g = work_dir() / "bad.graph";
    write_file(g, "e 1 2\n");
    CHECK(run("solve --graph " + g.string() + " -k 2").exit_code == 2);
    CHECK(run("solve --graph " + (work_dir() / "missing.graph").string() + " -k 2").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("tisehf end to end") {
    fs::path g = work_dir() / "pair.graph";
    write_file(g, "p 4 2\ne 1 2\ne 3 4\n");
    fs::path parts = work_dir() / "pair.parts";
    write_file(parts, "1 2\n3 4\n");
    auto r = run("tisehf --graph " + g.string() + " --partition " + parts.string() + " --oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.report["answer"] == "found");
    CHECK(r.report["verify"]["traversal"] == true);
    CHECK(r.report["oracle_agrees"] == true);

    // a block that is not a clique
    fs::path badparts = work_dir() / "bad.parts";
    write_file(badparts, "1 3\n2 4\n");
    CHECK(run("tisehf --graph " + g.string() + " --partition " + badparts.string()).exit_code == 2);

    // partition must cover every vertex
    fs::path partial = work_dir() / "partial.parts";
    write_file(partial, "1 2\n");
    CHECK(run("tisehf --graph " + g.string() + " --partition " + partial.string()).exit_code == 2);
}

TEST_CASE("gen chordal round trips and is deterministic") {
    fs::path out1 = work_dir() / "chordal1.graph";
    fs::path out2 = work_dir() / "chordal2.graph";
    CHECK(run("gen chordal --n 12 --density 0.5 --seed 5 --out " + out1.string()).exit_code == 0);
    CHECK(run("gen chordal --n 12 --density 0.5 --seed 5 --out " + out2.string()).exit_code == 0);
    std::ifstream a(out1), b(out2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());

    auto solve = run("solve --graph " + out1.string() + " -k 2 --verify-ehf --oracle");
    CHECK((solve.exit_code == 0 || solve.exit_code == 1));
    CHECK(solve.report["oracle_agrees"] == true);
}

TEST_CASE("gen planted produces a solvable verified triple") {
    fs::path prefix = work_dir() / "inst";
    auto gen = run("gen planted --k 3 --part-size 4 --noise 0.2 --seed 9 --out-prefix " +
                   prefix.string());
    CHECK(gen.exit_code == 0);
    CHECK(gen.report["files"].size() == 3);

    auto tis = run("tisehf --graph " + prefix.string() + ".graph --partition " + prefix.string() +
                   ".parts --oracle");
    CHECK(tis.exit_code == 0);
    CHECK(tis.report["oracle_agrees"] == true);

    auto verify = run("verify --graph " + prefix.string() + ".graph --witness " + prefix.string() +
                      ".witness --partition " + prefix.string() + ".parts");
    CHECK(verify.exit_code == 0);
    CHECK(verify.report["answer"] == "valid");
}

TEST_CASE("verify rejects a broken witness") {
    fs::path g = work_dir() / "k3.graph";
    write_file(g, "p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    fs::path w = work_dir() / "k3.witness";
    write_file(w, "1 2\n");
    auto r = run("verify --graph " + g.string() + " --witness " + w.string());
    CHECK(r.exit_code == 1);
    CHECK(r.report["answer"] == "invalid");
    CHECK(r.report["verify"]["independent"] == false);
    CHECK(r.report["verify"]["adjacent_pair"] == json::array({1, 2}));
}

TEST_CASE("gen parameter validation exits with 2") {
    CHECK(run("gen planted --k 9 --out-prefix " + (work_dir() / "x").string()).exit_code == 2);
    CHECK(run("gen chordal --n 5 --density 2.0 --out " + (work_dir() / "y.graph").string())
              .exit_code == 2);
}

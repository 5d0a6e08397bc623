#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(COVERPEB_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "coverpeb_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << body;
    return p.string();
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("phi and stacking") {
    std::string p3 = write_file("p3.g", "3 2\n0 1\n1 2\n");
    CliResult r = run_cli("phi " + p3 + " --weights uniform:1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "PHI 7 VERTEX 0\n");

    CliResult all = run_cli("stacking " + p3 + " --weights uniform:1 --all");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("VERTEX 1 VALUE 5") != std::string::npos);
    CHECK(all.out.find("SN 7 VERTEX 0") != std::string::npos);
}

TEST_CASE("cover verdicts carry matching exit codes") {
    std::string p3 = write_file("p3.g", "3 2\n0 1\n1 2\n");
    std::string p2 = write_file("p2.g", "2 1\n0 1\n");

    CliResult covers = run_cli("cover " + p3 + " --weights uniform:1 --dist '3 0 3'");
    CHECK(covers.exit_code == 0);
    CHECK(starts_with(covers.out, "COVERS\n"));
    CHECK(covers.out.find("METHOD oracle") != std::string::npos);

    CliResult loses = run_cli("cover " + p2 + " --weights uniform:1 --dist '2 0'");
    CHECK(loses.exit_code == 1);
    CHECK(starts_with(loses.out, "NOTCOVERS witness={0}\n"));

    CliResult unknown =
        run_cli("cover " + p3 + " --weights uniform:1 --dist '3 0 3' --method sufficient");
    CHECK(unknown.exit_code == 2);
    CHECK(starts_with(unknown.out, "UNKNOWN\n"));
}

TEST_CASE("certificates round trip through verify") {
    std::string p3 = write_file("p3.g", "3 2\n0 1\n1 2\n");
    std::string cert = (work_dir() / "p3.cert").string();

    CliResult covers = run_cli("cover " + p3 + " --weights uniform:1 --dist '3 0 3' --cert " +
                               cert);
    CHECK(covers.exit_code == 0);

    CliResult valid = run_cli("verify " + p3 + " --dist '3 0 3' --weights uniform:1 --cert " +
                              cert);
    CHECK(valid.exit_code == 0);
    CHECK(valid.out == "VALID\n");

    std::string bad = write_file("bad.cert", "CERT 2\nMOVE 0 1\nMOVE 0 1\n");
    CliResult invalid = run_cli("verify " + write_file("p2.g", "2 1\n0 1\n") +
                                " --dist '2 0' --weights uniform:1 --cert " + bad);
    CHECK(invalid.exit_code == 1);
    CHECK(invalid.out == "INVALID at 1\n");
}

TEST_CASE("oracle phi") {
    std::string p2 = write_file("p2.g", "2 1\n0 1\n");
    CliResult r = run_cli("oracle-phi " + p2 + " --weights uniform:1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "PHI 3\n");
}

TEST_CASE("search stats on demand") {
    std::string p2 = write_file("p2.g", "2 1\n0 1\n");
    CliResult r = run_cli("cover " + p2 +
                          " --weights uniform:1 --dist '2 0' --method oracle --stats");
    CHECK(r.exit_code == 1);
    CHECK(starts_with(r.out, "NOTCOVERS witness=oracle-exhausted-state-space\n"));
    CHECK(r.out.find("states_visited=2\n") != std::string::npos);
    CHECK(r.out.find("max_frontier=") != std::string::npos);
    CHECK(r.out.find("elapsed=") != std::string::npos);
}

TEST_CASE("products are written as readable graph files") {
    std::string p2 = write_file("p2.g", "2 1\n0 1\n");
    std::string prod = (work_dir() / "c4.g").string();
    CliResult r = run_cli("product " + p2 + " " + p2 + " -o " + prod);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PRODUCT vertices=4 edges=4") != std::string::npos);

    CliResult phi = run_cli("phi " + prod + " --weights uniform:1");
    CHECK(phi.exit_code == 0);
    CHECK(phi.out == "PHI 9 VERTEX 0\n");
}

TEST_CASE("conjecture report") {
    CliResult r = run_cli("conjecture --max-n 2 --max-weight 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# family=connected<=2 max_weight=1 budget=sn") != std::string::npos);
    CHECK(r.out.find("TESTED=") != std::string::npos);
    CHECK(r.out.find("CEX=0") != std::string::npos);
}

TEST_CASE("error exit codes") {
    std::string garbage = write_file("bad.g", "not a graph\n");
    CHECK(run_cli("phi " + garbage + " --weights uniform:1").exit_code == 3);

    CHECK(run_cli("phi nonexistent.g --weights uniform:1").exit_code == 3);

    std::string p2 = write_file("p2.g", "2 1\n0 1\n");
    CHECK(run_cli("phi " + p2 + " --weights '1 0'").exit_code == 4); // zero weight

    CHECK(run_cli("cover " + p2 + " --weights uniform:1").exit_code == 3); // missing --dist

    std::string split = write_file("split.g", "4 2\n0 1\n2 3\n");
    CHECK(run_cli("phi " + split + " --weights uniform:1").exit_code == 3);
}

TEST_CASE("stdin and file distributions") {
    std::string p2 = write_file("p2.g", "2 1\n0 1\n");
    CliResult piped = run_cli("phi - --weights uniform:1 < " + p2);
    CHECK(piped.exit_code == 0);
    CHECK(piped.out == "PHI 3 VERTEX 0\n");

    std::string wfile = write_file("w.dist", "2 1\n");
    CliResult from_file = run_cli("phi " + p2 + " --weights " + wfile);
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out == "PHI 5 VERTEX 1\n"); // V_1 = 2*2 + 1 beats V_0 = 2 + 2
}

TEST_CASE("exit codes track verdict lines across a corpus") {
    std::string p3 = write_file("p3.g", "3 2\n0 1\n1 2\n");
    for (const char* d : {"'7 0 0'", "'6 0 0'", "'1 1 1'", "'3 0 3'", "'0 0 0'", "'2 2 2'"}) {
        CliResult r = run_cli("cover " + p3 + " --weights uniform:1 --dist " + d);
        if (starts_with(r.out, "COVERS"))
            CHECK(r.exit_code == 0);
        else if (starts_with(r.out, "NOTCOVERS"))
            CHECK(r.exit_code == 1);
        else
            CHECK(r.exit_code == 2);
    }
}

} // TEST_SUITE

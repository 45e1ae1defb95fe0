// End-to-end checks of the command-line tool. Usage: test_cli_exec <path-to-rlse>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

#define EXPECT(cond)                                                              \
    do {                                                                          \
        if (!(cond)) {                                                            \
            ++failures;                                                           \
            std::cerr << "FAILED at line " << __LINE__ << ": " #cond "\n";        \
        }                                                                         \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& cmd) {
    RunResult res;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli_exec <path-to-rlse-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "rlse_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto p = [&](const std::string& name) { return (dir / name).string(); };

    // catalog -> check round trips
    auto cat = run(cli + " catalog boolean-ring 2 -o " + p("b2.txt"));
    EXPECT(cat.exit_code == 0);
    auto chk = run(cli + " check " + p("b2.txt"));
    EXPECT(chk.exit_code == 0);
    EXPECT(contains(chk.output, "rlse PASS"));
    EXPECT(contains(chk.output, "specific PASS"));
    EXPECT(contains(chk.output, "boolean-ring PASS"));
    EXPECT(contains(chk.output, "SUMMARY: PASS"));

    run(cli + " catalog specific-mo 2 -o " + p("rmo2.txt"));
    auto chk_mo = run(cli + " check " + p("rmo2.txt") + " --laws rlse,specific,w-axioms");
    EXPECT(chk_mo.exit_code == 0);
    EXPECT(contains(chk_mo.output, "SUMMARY: PASS"));

    // selected failing law gives exit 1 with a witness
    auto fail = run(cli + " check " + p("rmo2.txt") + " --laws boolean-ring");
    EXPECT(fail.exit_code == 1);
    EXPECT(contains(fail.output, "boolean-ring FAIL witness="));
    EXPECT(contains(fail.output, "SUMMARY: FAIL"));

    // weakly associative variant: rlse passes, specific fails
    run(cli + " catalog weakly-associative-mo2 1 -o " + p("wa1.txt"));
    auto wa = run(cli + " check " + p("wa1.txt") + " --laws rlse,specific,weakly-associative");
    EXPECT(wa.exit_code == 1);
    EXPECT(contains(wa.output, "rlse PASS"));
    EXPECT(contains(wa.output, "weakly-associative PASS"));
    EXPECT(contains(wa.output, "specific FAIL"));

    // transforms: mo2 -> ring -> lattice reproduces the lattice file exactly
    run(cli + " catalog mo 2 -o " + p("mo2.txt"));
    auto tr = run(cli + " transform r-of-l " + p("mo2.txt") + " -o " + p("ring.txt"));
    EXPECT(tr.exit_code == 0);
    auto ring_check = run(cli + " check " + p("ring.txt") + " --laws rlse,specific");
    EXPECT(ring_check.exit_code == 0);
    run(cli + " transform l-of-r " + p("ring.txt") + " -o " + p("lat.txt"));
    std::ifstream a(p("mo2.txt")), b(p("lat.txt"));
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    EXPECT(!sa.empty());
    EXPECT(sa == sb);

    // the emitted ring file equals the catalog one byte for byte
    auto again = run(cli + " catalog specific-mo 2 -o " + p("rmo2b.txt"));
    EXPECT(again.exit_code == 0);
    std::ifstream c(p("rmo2.txt")), d(p("ring.txt"));
    std::string sc((std::istreambuf_iterator<char>(c)), std::istreambuf_iterator<char>());
    std::string sd((std::istreambuf_iterator<char>(d)), std::istreambuf_iterator<char>());
    EXPECT(sc == sd);

    // JSON output is deterministic across runs
    auto j1 = run(cli + " check " + p("b2.txt") + " --format json");
    auto j2 = run(cli + " check " + p("b2.txt") + " --format json");
    EXPECT(j1.exit_code == 0);
    EXPECT(j1.output == j2.output);
    EXPECT(contains(j1.output, "\"passed\": true"));
    auto jf = run(cli + " check " + p("rmo2.txt") + " --format json");
    EXPECT(jf.exit_code == 1);
    EXPECT(contains(jf.output, "\"witness\""));

    // embeddability on the concrete MO2 family
    run(cli + " catalog concrete-mo2-events -o " + p("ev.txt"));
    auto emb_bad = run(cli + " embeddable " + p("ev.txt") + " --ambient " + p("ev.txt") +
                       " --subset p1 --subset p3");
    EXPECT(emb_bad.exit_code == 1);
    EXPECT(contains(emb_bad.output, "non-classical (quantum) relative to ambient"));
    EXPECT(contains(emb_bad.output, "failing at k=1"));
    EXPECT(contains(emb_bad.output, "SUMMARY: FAIL"));
    auto emb_ok = run(cli + " embeddable " + p("ev.txt") + " --ambient " + p("ev.txt") +
                      " --subset p1 --subset p2");
    EXPECT(emb_ok.exit_code == 0);
    EXPECT(contains(emb_ok.output, "classical-compatible"));
    // two-valued events over the full state set always embed
    auto emb_tv = run(cli + " embeddable " + p("ev.txt") + " --two-valued");
    EXPECT(emb_tv.exit_code == 0);
    EXPECT(contains(emb_tv.output, "classical-compatible"));
    // --ambient and --two-valued are mutually exclusive
    auto emb_x = run(cli + " embeddable " + p("ev.txt") + " --ambient " + p("ev.txt") +
                     " --two-valued");
    EXPECT(emb_x.exit_code == 2);

    // qcheck on a hand-written Boolean power-set family
    {
        std::ofstream out(p("square.txt"));
        out << "states s1 s2\nzero 0 0\na 1 0\nb 0 1\none 1 1\n";
    }
    auto q = run(cli + " qcheck " + p("square.txt"));
    EXPECT(q.exit_code == 0);
    EXPECT(contains(q.output, "(a) two-valued:   true"));
    EXPECT(contains(q.output, "(e) Boolean ring: true"));
    EXPECT(contains(q.output, "equivalence (a)-(e): holds"));

    // usage errors exit 2
    EXPECT(run(cli).exit_code == 2);
    EXPECT(run(cli + " frobnicate").exit_code == 2);
    EXPECT(run(cli + " check " + p("nonexistent.txt")).exit_code == 2);
    EXPECT(run(cli + " check " + p("rmo2.txt") + " --laws no-such-law").exit_code == 2);
    EXPECT(run(cli + " catalog no-such-object -o " + p("x.txt")).exit_code == 2);
    {
        std::ofstream out(p("garbage.txt"));
        out << "rlse 2 0 1\n0 1\n";
    }
    EXPECT(run(cli + " check " + p("garbage.txt")).exit_code == 2);

    // precondition violations exit 3
    run(cli + " catalog benzene-o6 -o " + p("benzene.txt"));
    auto bz = run(cli + " transform r-of-l " + p("benzene.txt") + " -o " + p("no.txt"));
    EXPECT(bz.exit_code == 3);
    EXPECT(run(cli + " catalog boolean-ring 9 -o " + p("no.txt")).exit_code == 3);
    EXPECT(run(cli + " transform l-of-r " + p("mo2.txt") + " -o " + p("no.txt")).exit_code == 3);
    // qcheck on a family that is not max-min closed
    EXPECT(run(cli + " qcheck " + p("ev.txt")).exit_code == 3);

    // the benzene lattice still passes the ortholattice check alone
    auto bz_chk = run(cli + " check " + p("benzene.txt"));
    EXPECT(bz_chk.exit_code == 1);
    EXPECT(contains(bz_chk.output, "ortholattice PASS"));
    EXPECT(contains(bz_chk.output, "orthomodular FAIL"));

    fs::remove_all(dir);
    if (failures == 0) {
        std::cout << "test_cli_exec: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli_exec: " << failures << " check(s) failed\n";
    return 1;
}

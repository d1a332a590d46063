// Black-box checks of the goldenextremal binary: exit codes, pinned output
// lines, format round trips, and render determinism. argv[1] is the CLI path.
#include "goldenext/result_document.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
int g_failures = 0;

void check(bool ok, const std::string& label) {
    std::cout << (ok ? "ok   " : "FAIL ") << label << "\n";
    if (!ok) ++g_failures;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult result;
    const std::string cmd = "\"" + g_cli + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
    return result;
}

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream out;
    out << file.rdbuf();
    return out.str();
}

int count_of(const std::string& text, const std::string& needle) {
    int n = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

void exit_codes() {
    check(run("solve area").code == 0, "solve area exits 0");
    check(run("solve area --tol 0").code == 1, "solve area --tol 0 exits 1");
    check(run("solve area --tol 1e-20").code == 1, "out-of-range tolerance exits 1");
    check(run("solve bogus").code == 1, "unknown problem exits 1");
    check(run("").code == 1, "missing subcommand exits 1");
    check(run("--help").code == 0, "--help exits 0");
    check(run("sequence --n-max 0").code == 1, "sequence --n-max 0 exits 1");
    check(run("sequence --n-max 501").code == 1, "sequence --n-max 501 exits 1");
    check(run("render fig1 --width 0 --out cli_zero.svg").code == 1, "zero width exits 1");
    check(run("render fig2 --n-max 0 --out cli_zero.svg").code == 1, "fig2 n-max 0 exits 1");
    check(run("verify all").code == 0, "verify all exits 0");
}

void pinned_lines() {
    const RunResult area = run("solve area --tol 1e-9");
    check(has(area.out, "phi^3/2 = 2.1180339887"), "area banner digits");
    check(has(area.out, "area_exact = 1/2 + 1*phi"), "exact area in canonical grammar");
    check(has(area.out, "apex_sine_exactly_one = yes"), "right-angle certificate");

    const RunResult iso = run("solve perimeter-isosceles");
    check(has(iso.out, "v/h = 1.27201965 (√φ)"), "isosceles vertical ratio line");
    check(has(iso.out, "s/h = 1.61803399 (φ)"), "isosceles slant ratio line");

    const RunResult seq = run("sequence --n-max 2");
    check(has(seq.out, "1, √(2φ), φ·√φ"), "row 2 pretty sides");
    check(has(seq.out, "0.636009824757"), "row 1 area digits");
    check(has(seq.out, "0.809016994375"), "limit row area digits");
    check(has(seq.out, "1, φ, √(2 + φ)"), "limit row pretty sides");

    check(has(run("verify identities").out, "Eq2 OK n=1..100"), "identity suite banner");
    check(has(run("verify bounds").out, "Eq2b OK, equality at n=1,2"), "bounds suite banner");
    check(has(run("verify construction").out, "BE^2 = 2φ exact: OK"), "construction banner");

    const RunResult both = run("solve perimeter-nonacute --both-constraint-readings");
    check(has(both.out, "constraint_reading = nonacute_and_no_triangle"),
          "second constraint reading present");
    check(has(both.out, "combined_perimeter = 7.3137515"), "combined reading perimeter");
}

void json_round_trip() {
    using goldenext::ResultDocument;
    const RunResult area = run("solve area --format json");
    check(area.code == 0, "json solve exits 0");
    ResultDocument doc;
    bool parsed = true;
    try {
        doc = ResultDocument::from_json(area.out);
    } catch (...) {
        parsed = false;
    }
    check(parsed, "json output parses as a result document");
    if (!parsed) return;
    check(doc.command == "solve", "document command");
    check(doc.tool_version == "1.0.0", "document tool version");
    check(doc.to_json() == area.out, "document re-serializes byte for byte");
    bool found = false;
    for (const auto& [key, value] : doc.outputs) {
        if (key == "phi_cubed_over_two") found = (value == "2.1180339887");
    }
    check(found, "pinned digits preserved in json");

    const RunResult seq = run("sequence --n-max 2 --format json");
    ResultDocument seq_doc = ResultDocument::from_json(seq.out);
    check(seq_doc.to_json() == seq.out, "sequence json re-serializes byte for byte");
    bool pretty = false;
    for (const auto& [key, value] : seq_doc.outputs) {
        if (key == "row_002_sides_pretty") pretty = (value == "1, √(2φ), φ·√φ");
    }
    check(pretty, "unicode side strings survive the json trip");
}

void csv_format() {
    const RunResult seq = run("sequence --n-max 3 --format csv");
    check(seq.code == 0, "csv sequence exits 0");
    check(seq.out.rfind("n,f_n,f_n_plus_1,side_short,side_mid,side_long,sides_pretty,", 0) == 0,
          "csv header row first");
    check(count_of(seq.out, "\n") == 5, "header, three rows, limit row");
    check(has(seq.out, "\"1, √(2φ), φ·√φ\""), "comma-bearing field quoted");

    const RunResult ver = run("verify bounds --format csv");
    check(ver.out.rfind("key,value\n", 0) == 0, "verify csv header");
    check(has(ver.out, "eq2b,\"OK, equality at n=1,2\""), "verify csv quoted value");
}

void render_files() {
    const RunResult first = run("render fig1 --out cli_fig1.svg");
    check(first.code == 0, "render fig1 exits 0");
    check(has(first.out, "wrote cli_fig1.svg ("), "wrote line names the path");
    const std::string svg1 = slurp("cli_fig1.svg");
    check(count_of(svg1, "<path") == 1, "fig1 has exactly one path");
    check(has(svg1, "class=\"tangent\""), "fig1 tangent sides");

    run("render fig1 --out cli_fig1_again.svg");
    check(slurp("cli_fig1_again.svg") == svg1, "fig1 renders byte-identically");

    const RunResult fig3 = run("render fig3 --width 640 --height 480 --out cli_fig3.svg");
    check(fig3.code == 0, "render fig3 exits 0");
    const std::string svg3 = slurp("cli_fig3.svg");
    check(has(svg3, "id=\"pt-E\""), "fig3 marks point E");
    check(has(svg3, "width=\"640\""), "fig3 honors width");

    const RunResult fig2 = run("render fig2 --n-max 4 --out cli_fig2.svg");
    check(fig2.code == 0, "render fig2 exits 0");
    check(has(slurp("cli_fig2.svg"), "class=\"leg-T4\""), "fig2 honors n-max");

    check(run("render fig1 --out /nonexistent-dir/x.svg").code == 1,
          "unwritable path exits 1");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-goldenextremal>\n";
        return 2;
    }
    g_cli = argv[1];
    exit_codes();
    pinned_lines();
    json_round_trip();
    csv_format();
    render_files();
    if (g_failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cout << g_failures << " cli checks failed\n";
    return 1;
}

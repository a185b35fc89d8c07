// Command-line driver: constructs the G2(4) graph and its derived graphs,
// runs the verification suites, and exports interchange files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g24/analysis.hpp"
#include "g24/construction.hpp"
#include "g24/graph_io.hpp"
#include "g24/hierarchy.hpp"
#include "g24/isomorphism.hpp"

namespace {

struct CheckTally {
    int failures = 0;

    void line(bool pass, const std::string& text)
    {
        std::cout << (pass ? "PASS " : "FAIL ") << text << "\n";
        if (!pass)
            ++failures;
    }
};

const g24::Construction& built()
{
    static const g24::Construction c = g24::build_all();
    return c;
}

void expect(CheckTally& t, const std::string& what, long long got, long long want)
{
    t.line(got == want, what + ": " + std::to_string(got) +
                            (got == want ? "" : " (want " + std::to_string(want) + ")"));
}

int cmd_build()
{
    CheckTally t;
    const auto& c = built();

    expect(t, "points", c.tables.num_points(), 273);
    expect(t, "isotropic points", c.tables.num_isotropic(), 65);
    expect(t, "nonisotropic points", c.tables.num_nonisotropic(), 208);
    expect(t, "orthogonal bases", static_cast<long long>(c.triangles.size()), 416);
    expect(t, "|B|", static_cast<long long>(c.b_vertices.size()), 96);
    expect(t, "|C|", static_cast<long long>(c.c_vertices.size()), 320);
    expect(t, "|X|", static_cast<long long>(c.xw.x.size()), 16);
    expect(t, "G edges", static_cast<long long>(c.g.edge_count()), 20800);
    expect(t, "E edges", static_cast<long long>(c.e.edge_count()), 12160);
    expect(t, "H edges", static_cast<long long>(c.h.edge_count()), 13440);
    for (int r = 0; r < 5; ++r)
        expect(t, c.f[r].label() + " edges", static_cast<long long>(c.f[r].edge_count()),
               7680);

    auto res = g24::verify_srg(c.e);
    std::cout << "INFO E srg verdict: "
              << (res.ok() ? g24::to_string(*res.params) : "not strongly regular ("
                  + res.failure + ")")
              << "\n";
    return t.failures;
}

int cmd_check_srg()
{
    CheckTally t;
    const auto& c = built();

    auto check = [&](const g24::Graph& g, const g24::SrgParams& want) {
        auto res = g24::verify_srg(g);
        if (res.ok() && *res.params == want)
            t.line(true, g.label() + ": " + g24::to_string(want));
        else
            t.line(false, g.label() + ": " +
                              (res.ok() ? "got " + g24::to_string(*res.params)
                                        : res.failure));
    };
    check(c.g, {416, 100, 36, 20});
    check(c.h, {336, 80, 28, 16});
    for (const auto& f : c.f)
        check(f, {256, 60, 20, 12});
    return t.failures;
}

int cmd_cliques(int s_max)
{
    const auto& c = built();
    const g24::Graph* graphs[] = {&c.g, &c.e, &c.h, &c.f[4]};
    const char* names[] = {"G", "E", "H", "F"};
    for (int i = 0; i < 4; ++i) {
        auto profile = g24::count_cliques(*graphs[i], s_max);
        std::cout << names[i] << ":" << g24::render_profile(profile) << "\n";
    }
    return 0;
}

int cmd_hierarchy()
{
    const auto& c = built();
    auto report = g24::verify_hierarchy(c.e, c.m, c.xw.w);
    std::cout << report.render();
    auto census = g24::coclique_census(c.e, c.m);
    std::cout << census.render();
    return (report.all_passed() && census.all_ok()) ? 0 : 1;
}

g24::Coloring cell_set_seed()
{
    // vertices of an F variant arrive in (r,s,t,u) order: 64 per cell set
    g24::Coloring seed(256);
    for (int p = 0; p < 256; ++p)
        seed[p] = p / 64;
    return seed;
}

int cmd_iso(const std::string& out_dir)
{
    CheckTally t;
    const auto& c = built();
    const auto seed = cell_set_seed();
    if (!out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
    }
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            auto res = g24::find_isomorphism(c.f[i], c.f[j], seed, seed);
            bool ok = res.found() && g24::verify_witness(c.f[i], c.f[j], res.witness->perm);
            t.line(ok, c.f[i].label() + " ~ " + c.f[j].label() +
                           (ok ? ": verified witness" : ": " + res.reason));
            if (ok && !out_dir.empty()) {
                std::filesystem::path p = std::filesystem::path(out_dir) /
                                          ("witness_" + std::to_string(i) + "_" +
                                           std::to_string(j) + ".txt");
                std::ofstream f(p, std::ios::binary);
                f << g24::render_witness(*res.witness);
                if (!f) {
                    std::cerr << "error: cannot write " << p.string() << "\n";
                    ++t.failures;
                }
            }
        }
    }
    return t.failures;
}

int cmd_export(const std::string& format, const std::string& out_dir)
{
    const auto& c = built();
    std::string (*writer)(const g24::Graph&) = nullptr;
    std::string ext;
    if (format == "graph6") {
        writer = g24::write_graph6;
        ext = ".g6";
    } else if (format == "dimacs") {
        writer = g24::write_dimacs;
        ext = ".dimacs";
    } else if (format == "dreadnaut") {
        writer = g24::write_dreadnaut;
        ext = ".dre";
    } else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return 1;
    }

    std::vector<std::pair<std::string, const g24::Graph*>> jobs = {
        {"G24", &c.g}, {"320", &c.e}, {"336", &c.h}};
    for (int r = 0; r < 5; ++r)
        jobs.emplace_back("256_" + std::to_string(r), &c.f[r]);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    int failures = 0;
    for (const auto& [stem, g] : jobs) {
        std::filesystem::path p = std::filesystem::path(out_dir) / (stem + ext);
        std::ofstream f(p, std::ios::binary);
        f << writer(*g);
        f.close();
        if (!f) {
            std::cerr << "error: cannot write " << p.string() << "\n";
            ++failures;
        } else {
            std::cout << "wrote " << p.string() << "\n";
        }
    }
    return failures;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Constructs the G2(4) graph from the Hermitian unital in PG(2,16), "
                 "derives the 320-, 336- and 256-vertex graphs, and verifies their "
                 "properties"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "construct everything and print the census");

    auto* check = app.add_subcommand("check-srg",
                                     "verify the strong-regularity parameters of G, H "
                                     "and the five 256-vertex graphs");

    int s_max = 7;
    auto* cliques = app.add_subcommand("cliques", "print clique-count profiles");
    cliques->add_option("--max", s_max, "largest clique size to count")
        ->check(CLI::Range(2, 16));

    auto* hierarchy =
        app.add_subcommand("hierarchy", "verify the cell hierarchy and coclique census");

    std::string iso_out;
    auto* iso = app.add_subcommand("iso",
                                   "find and verify pairwise isomorphisms between the "
                                   "five 256-vertex graphs");
    iso->add_option("--out", iso_out, "directory for witness files");

    std::string format, export_out;
    auto* exp = app.add_subcommand("export", "write the eight graphs to files");
    exp->add_option("--format", format, "graph6, dimacs or dreadnaut")->required();
    exp->add_option("--out", export_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    int failures = 0;
    try {
        if (build->parsed())
            failures = cmd_build();
        else if (check->parsed())
            failures = cmd_check_srg();
        else if (cliques->parsed())
            failures = cmd_cliques(s_max);
        else if (hierarchy->parsed())
            failures = cmd_hierarchy();
        else if (iso->parsed())
            failures = cmd_iso(iso_out);
        else if (exp->parsed())
            failures = cmd_export(format, export_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (failures != 0)
        return 1;
    std::cout << "== Regular program stop ==\n";
    return 0;
}

// handy-sql-conform: replay golden transcripts and report divergences.

#include "handysql/transcript.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace handysql;
namespace fs = std::filesystem;

int main(int argc, char **argv) {
    CLI::App app{"Golden transcript conformance runner"};
    std::vector<std::string> suites;
    bool all = false, update = false;
    std::string root = HANDYSQL_CONFORMANCE_DIR;
    auto *suiteOpt = app.add_option("--suite", suites, "suite name (file suites/NAME.txt); repeatable");
    app.add_flag("--all", all, "every suite under suites/")->excludes(suiteOpt);
    app.add_flag("--update-goldens", update, "rewrite expected output from the current engine");
    app.add_option("--dir", root, "conformance directory holding suites/ and fixtures/");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    fs::path suiteDir = fs::path(root) / "suites";
    fs::path fixtureDir = fs::path(root) / "fixtures";
    if (all || suites.empty()) {
        std::error_code ec;
        for (const auto &entry : fs::directory_iterator(suiteDir, ec))
            if (entry.path().extension() == ".txt")
                suites.push_back(entry.path().stem().string());
        if (ec) {
            std::cerr << "handy-sql-conform: cannot list " << suiteDir << '\n';
            return 2;
        }
        std::sort(suites.begin(), suites.end());
    }

    bool ok = true;
    for (const std::string &name : suites) {
        fs::path file = suiteDir / (name + ".txt");
        try {
            Transcript t = parseTranscriptFile(file);
            ReplayReport report = replay(t, loadFixture(t.fixture, fixtureDir), name);
            std::cout << report.text();
            if (update) {
                std::ofstream out(file, std::ios::trunc);
                out << formatTranscript(t, report);
                if (!out) {
                    std::cerr << "handy-sql-conform: cannot write " << file << '\n';
                    return 2;
                }
                std::cout << name << ": golden updated\n";
            } else {
                ok = ok && report.passed();
            }
        } catch (const std::exception &e) {
            std::cerr << "handy-sql-conform: " << name << ": " << e.what() << '\n';
            return 2;
        }
    }
    return ok ? 0 : 1;
}

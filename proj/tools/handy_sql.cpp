// handy-sql: interactive shell and script runner.

#include "handysql/persistence.hpp"
#include "handysql/shell.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <unistd.h>

using namespace handysql;

int main(int argc, char **argv) {
    CLI::App app{"Oracle-flavoured SQL shell"};
    std::string dbPath, scriptPath;
    bool strict = false, quiet = false;
    app.add_option("--db", dbPath, "snapshot file loaded at start and saved at exit");
    app.add_option("--script", scriptPath, "run statements from FILE instead of the console");
    app.add_flag("--strict", strict, "exit 1 if any statement fails");
    app.add_flag("--quiet", quiet, "no prompts or echoed input");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    Database db;
    if (!dbPath.empty() && std::filesystem::exists(dbPath)) {
        try {
            db = load(dbPath);
        } catch (const SnapshotError &e) {
            std::cerr << "handy-sql: " << e.what() << '\n';
            return kExitUsage;
        }
    }

    Session session(db, std::cout, ShellOptions{true, quiet});
    if (!scriptPath.empty()) {
        std::ifstream in(scriptPath);
        if (!in) {
            std::cerr << "handy-sql: cannot read " << scriptPath << '\n';
            return kExitUsage;
        }
        session.runScript(in);
    } else {
        session.runInteractive(std::cin, isatty(STDIN_FILENO) != 0);
    }
    std::cout.flush();

    if (!dbPath.empty()) {
        try {
            save(db, dbPath);
        } catch (const SnapshotError &e) {
            std::cerr << "handy-sql: " << e.what() << '\n';
            return kExitUsage;
        }
    }
    return strict && session.failures() > 0 ? kExitStrictFailure : kExitOk;
}

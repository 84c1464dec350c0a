#pragma once

#include "handysql/executor.hpp"
#include "handysql/shell.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace handysql {

/// A golden transcript file:
///
///   -- fixture students          (optional, before the first entry)
///   -- bind s_roll=3             (values for the next entry's &S_ROLL)
///   -- any other comment         (kept, ignored)
///   SQL> first statement line
///     2  continuation line
///   expected output lines ...
struct TranscriptEntry {
    std::vector<std::string> comments; // directive/comment lines preceding the entry, verbatim
    std::vector<std::pair<std::string, std::string>> bindings;
    RawStatement statement;
    std::vector<std::string> echoLines; // statement lines as written, with prompts
    std::vector<std::string> expected;
    int line = 0; // line of the "SQL> " prompt
};

struct Transcript {
    std::string fixture = "empty";
    std::vector<std::string> header; // lines before the first entry's comments
    std::vector<TranscriptEntry> entries;
    std::vector<std::string> trailer; // comments after the last entry
};

class TranscriptError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Transcript parseTranscript(std::istream &in);
Transcript parseTranscriptFile(const std::filesystem::path &path);

/// Runs of spaces/tabs collapse to one space; trailing whitespace goes.
std::string normalizeLine(std::string_view line);
/// Normalized lines with blank lines dropped.
std::vector<std::string> normalizeBlock(const std::vector<std::string> &lines);

struct EntryResult {
    int line = 0;
    std::string statement; // first statement line, for the report
    bool passed = false;
    std::vector<std::string> actual; // raw output lines
    std::vector<std::string> diff;   // "-expected" / "+actual" around the first divergence
};

struct ReplayReport {
    std::string suite;
    std::vector<EntryResult> entries;

    bool passed() const;
    std::string text() const;
};

/// "empty" is a fresh database; anything else loads fixtures/<name>.db.
Database loadFixture(const std::string &name, const std::filesystem::path &fixtureDir);

/// Replays entries in order in one session over `db`.
ReplayReport replay(const Transcript &t, Database db, std::string suite = {});

/// The transcript with every expected block replaced by the actual output.
std::string formatTranscript(const Transcript &t, const ReplayReport &actual);

} // namespace handysql

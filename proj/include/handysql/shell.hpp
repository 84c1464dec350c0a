#pragma once

#include "handysql/executor.hpp"

#include <deque>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace handysql {

/// One statement as typed: its physical lines, terminator removed.
struct RawStatement {
    std::vector<std::string> lines;

    std::string text() const;
    friend bool operator==(const RawStatement &, const RawStatement &) = default;
};

/// Accumulates physical lines into statements. A statement ends at a line
/// whose last non-blank character is ";" or at a lone "/". A DESC/DESCRIBE
/// command is complete on its own line, terminator or not.
class StatementReader {
public:
    /// Returns the finished statement, if `line` finished one.
    std::optional<RawStatement> feed(const std::string &line);

    bool midStatement() const { return !pending_.empty(); }
    /// Line number the next physical line will get (1 when idle).
    int nextLineNumber() const { return static_cast<int>(pending_.size()) + 1; }
    void reset() { pending_.clear(); }

private:
    std::vector<std::string> pending_;
    std::optional<RawStatement> last_;
};

/// "SQL> " for the first line of a statement, "  2  ", "  3  ", ... after.
std::string promptFor(int lineNumber);

/// Supplies values for "&NAME" markers, one request per occurrence.
class VariableSource {
public:
    virtual ~VariableSource() = default;
    virtual std::optional<std::string> next(const std::string &name) = 0;
};

/// Values handed out in order, per variable name.
class BindingList : public VariableSource {
public:
    BindingList() = default;
    explicit BindingList(const std::vector<std::pair<std::string, std::string>> &bindings);

    void add(std::string name, std::string value);
    bool empty() const;
    std::optional<std::string> next(const std::string &name) override;

private:
    std::map<std::string, std::deque<std::string>> values_;
};

class MissingBinding : public std::runtime_error {
public:
    explicit MissingBinding(const std::string &name)
        : std::runtime_error("no value supplied for substitution variable " + name), name_(name) {}
    const std::string &name() const { return name_; }

private:
    std::string name_;
};

/// Replaces each "&NAME" left to right with the next value for NAME. Names
/// are uppercased before lookup. `prompt`, when set, is called with
/// "Enter value for name: " before each request. Throws MissingBinding.
std::string substituteVariables(const std::string &text, VariableSource &source,
                                std::map<std::string, std::string> *cache = nullptr,
                                const std::function<void(const std::string &)> &prompt = {});

std::string renderResultSet(const ResultSet &rs);

struct ShellOptions {
    bool echo = true;  // print prompts and the statement lines read
    bool quiet = false; // suppress prompts and echoed input; results still print
};

/// A REPL session over one database.
class Session {
public:
    Session(Database &db, std::ostream &out, ShellOptions options = {});

    /// Reads statements from `in`; substitution values are read from `in`
    /// too. With `terminal` false, input lines are echoed after the prompt so
    /// the output reads like a script transcript.
    void runInteractive(std::istream &in, bool terminal);

    /// Statements plus "-- bind name=value" lines giving substitution values.
    void runScript(std::istream &in);

    /// Substitute, execute and render one statement.
    void execute(const RawStatement &stmt, VariableSource &source);
    /// As execute, with each bound value echoed after its prompt the way a
    /// script transcript shows it.
    void executeScripted(const RawStatement &stmt, BindingList &bindings);

    int failures() const { return failures_; }
    const std::map<std::string, std::string> &substitutionCache() const { return cache_; }

private:
    void prompt(int lineNumber);
    void echoLine(const std::string &line);
    void render(const Outcome &outcome);

    Database &db_;
    std::ostream &out_;
    ShellOptions options_;
    std::map<std::string, std::string> cache_;
    int failures_ = 0;
};

/// Parses "-- bind NAME=VALUE"; nullopt for any other line.
std::optional<std::pair<std::string, std::string>> parseBindDirective(const std::string &line);

enum ExitCode { kExitOk = 0, kExitStrictFailure = 1, kExitUsage = 2 };

} // namespace handysql

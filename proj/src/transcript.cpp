#include "handysql/transcript.hpp"

#include "handysql/persistence.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace handysql {

namespace {

bool isDirective(const std::string &line) {
    return line.size() > 3 && line.rfind("-- ", 0) == 0 && std::isalpha(static_cast<unsigned char>(line[3]));
}

std::vector<std::string> splitLines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        out.push_back(line);
    return out;
}

[[noreturn]] void fail(int line, const std::string &what) {
    throw TranscriptError("transcript line " + std::to_string(line) + ": " + what);
}

// "  2  text" -> text, when the number matches.
std::optional<std::string> continuationText(const std::string &line, int expected) {
    size_t i = line.find_first_not_of(' ');
    if (i == std::string::npos)
        return std::nullopt;
    size_t digitsEnd = i;
    while (digitsEnd < line.size() && std::isdigit(static_cast<unsigned char>(line[digitsEnd])))
        ++digitsEnd;
    if (digitsEnd == i || std::stoi(line.substr(i, digitsEnd - i)) != expected)
        return std::nullopt;
    if (digitsEnd == line.size())
        return std::string();
    if (line[digitsEnd] != ' ')
        return std::nullopt;
    size_t start = digitsEnd + 1;
    if (start < line.size() && line[start] == ' ')
        ++start;
    return line.substr(start);
}

} // namespace

Transcript parseTranscript(std::istream &in) {
    Transcript t;
    std::vector<std::string> pendingComments;
    std::vector<std::pair<std::string, std::string>> pendingBindings;
    StatementReader reader;
    TranscriptEntry *current = nullptr;
    bool inStatement = false;

    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();

        if (inStatement) {
            auto text = continuationText(line, reader.nextLineNumber());
            if (!text)
                fail(n, "expected continuation line " + std::to_string(reader.nextLineNumber()));
            current->echoLines.push_back(line);
            if (auto stmt = reader.feed(*text)) {
                current->statement = *stmt;
                inStatement = false;
            }
            continue;
        }

        if (line.rfind("SQL>", 0) == 0) {
            std::string text = line.substr(4);
            if (!text.empty() && text[0] == ' ')
                text.erase(0, 1);
            t.entries.push_back({});
            current = &t.entries.back();
            current->comments = std::move(pendingComments);
            current->bindings = std::move(pendingBindings);
            pendingComments.clear();
            pendingBindings.clear();
            current->line = n;
            current->echoLines.push_back(line);
            if (auto stmt = reader.feed(text)) {
                current->statement = *stmt;
            } else if (reader.midStatement()) {
                inStatement = true;
            } else {
                fail(n, "prompt without a statement");
            }
            continue;
        }

        if (isDirective(line)) {
            if (line.rfind("-- fixture ", 0) == 0) {
                if (!t.entries.empty())
                    fail(n, "fixture directive after the first entry");
                t.fixture = line.substr(11);
                t.header.push_back(line);
                continue;
            }
            if (auto bind = parseBindDirective(line))
                pendingBindings.push_back(*bind);
            else if (line.rfind("-- bind", 0) == 0)
                fail(n, "malformed bind directive");
            pendingComments.push_back(line);
            continue;
        }

        if (!current) {
            if (!normalizeLine(line).empty())
                fail(n, "output before the first \"SQL> \" entry");
            continue;
        }
        current->expected.push_back(line);
    }
    if (inStatement)
        fail(current->line, "statement is never terminated");
    t.trailer = std::move(pendingComments);
    if (!pendingBindings.empty())
        throw TranscriptError("transcript ends with bind directives that no entry uses");
    return t;
}

Transcript parseTranscriptFile(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw TranscriptError("cannot read " + path.string());
    return parseTranscript(in);
}

std::string normalizeLine(std::string_view line) {
    std::string out;
    bool space = false;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') {
            space = true;
            continue;
        }
        if (space)
            out += ' ';
        space = false;
        out += c;
    }
    return out;
}

std::vector<std::string> normalizeBlock(const std::vector<std::string> &lines) {
    std::vector<std::string> out;
    for (const std::string &l : lines) {
        std::string n = normalizeLine(l);
        if (!n.empty())
            out.push_back(std::move(n));
    }
    return out;
}

bool ReplayReport::passed() const {
    for (const EntryResult &e : entries)
        if (!e.passed)
            return false;
    return true;
}

std::string ReplayReport::text() const {
    std::ostringstream out;
    size_t ok = 0;
    for (const EntryResult &e : entries) {
        ok += e.passed;
        out << (e.passed ? "PASS" : "FAIL") << ' ' << suite << ':' << e.line << "  " << e.statement << '\n';
        for (const std::string &d : e.diff)
            out << "    " << d << '\n';
    }
    out << suite << ": " << ok << '/' << entries.size() << " entries passed\n";
    return out.str();
}

Database loadFixture(const std::string &name, const std::filesystem::path &fixtureDir) {
    if (name == "empty")
        return Database{};
    return load(fixtureDir / (name + ".db"));
}

ReplayReport replay(const Transcript &t, Database db, std::string suite) {
    ReplayReport report{std::move(suite), {}};
    std::ostringstream out;
    Session session(db, out);
    for (const TranscriptEntry &entry : t.entries) {
        out.str("");
        BindingList bindings(entry.bindings);
        session.executeScripted(entry.statement, bindings);

        EntryResult r;
        r.line = entry.line;
        r.statement = entry.statement.lines.empty() ? std::string() : entry.statement.lines.front();
        r.actual = splitLines(out.str());
        auto expected = normalizeBlock(entry.expected);
        auto actual = normalizeBlock(r.actual);
        r.passed = expected == actual;
        if (!r.passed) {
            size_t i = 0;
            while (i < expected.size() && i < actual.size() && expected[i] == actual[i])
                ++i;
            r.diff.push_back("@@ output line " + std::to_string(i + 1) + " @@");
            if (i < expected.size())
                r.diff.push_back("-" + expected[i]);
            if (i < actual.size())
                r.diff.push_back("+" + actual[i]);
        }
        report.entries.push_back(std::move(r));
    }
    return report;
}

std::string formatTranscript(const Transcript &t, const ReplayReport &actual) {
    std::ostringstream out;
    for (const std::string &l : t.header)
        out << l << '\n';
    for (size_t i = 0; i < t.entries.size(); ++i) {
        const TranscriptEntry &e = t.entries[i];
        for (const std::string &l : e.comments)
            out << l << '\n';
        for (const std::string &l : e.echoLines)
            out << l << '\n';
        const auto &lines = i < actual.entries.size() ? actual.entries[i].actual : e.expected;
        for (const std::string &l : lines) {
            std::string trimmed = l;
            while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t'))
                trimmed.pop_back();
            out << trimmed << '\n';
        }
    }
    for (const std::string &l : t.trailer)
        out << l << '\n';
    return out.str();
}

} // namespace handysql

#include "handysql/shell.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>

namespace handysql {

namespace {

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string upper(std::string s) {
    for (char &c : s)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

std::string lower(std::string s) {
    for (char &c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool isDescribeLine(const std::string &line) {
    std::string t = trim(line);
    size_t end = 0;
    while (end < t.size() && std::isalpha(static_cast<unsigned char>(t[end])))
        ++end;
    std::string word = upper(t.substr(0, end));
    return (word == "DESC" || word == "DESCRIBE") && (end == t.size() || std::isspace(static_cast<unsigned char>(t[end])));
}

bool isNameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '#';
}

std::string padTo(const std::string &s, size_t width, bool right) {
    if (s.size() >= width)
        return s;
    std::string pad(width - s.size(), ' ');
    return right ? pad + s : s + pad;
}

std::string rtrim(std::string s) {
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

} // namespace

std::string RawStatement::text() const {
    std::string out;
    for (size_t i = 0; i < lines.size(); ++i)
        out += (i ? "\n" : "") + lines[i];
    return out;
}

std::optional<RawStatement> StatementReader::feed(const std::string &rawLine) {
    std::string line = rawLine;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    std::string t = trim(line);

    if (t == "/") {
        if (pending_.empty())
            return last_; // sqlplus re-runs the buffer
        RawStatement s{std::move(pending_)};
        pending_.clear();
        last_ = s;
        return s;
    }
    if (pending_.empty()) {
        if (t.empty() || t.rfind("--", 0) == 0)
            return std::nullopt;
        if (isDescribeLine(line)) {
            size_t semi = line.find_last_not_of(" \t");
            if (line[semi] == ';')
                line.erase(semi);
            RawStatement s{{line}};
            last_ = s;
            return s;
        }
    }
    size_t lastChar = line.find_last_not_of(" \t");
    if (lastChar != std::string::npos && line[lastChar] == ';') {
        line.erase(lastChar);
        pending_.push_back(line);
        RawStatement s{std::move(pending_)};
        pending_.clear();
        last_ = s;
        return s;
    }
    pending_.push_back(line);
    return std::nullopt;
}

std::string promptFor(int lineNumber) {
    if (lineNumber <= 1)
        return "SQL> ";
    char buf[16];
    std::snprintf(buf, sizeof buf, "%3d  ", lineNumber);
    return buf;
}

BindingList::BindingList(const std::vector<std::pair<std::string, std::string>> &bindings) {
    for (const auto &[name, value] : bindings)
        add(name, value);
}

void BindingList::add(std::string name, std::string value) { values_[upper(std::move(name))].push_back(std::move(value)); }

bool BindingList::empty() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto &kv) { return kv.second.empty(); });
}

std::optional<std::string> BindingList::next(const std::string &name) {
    auto it = values_.find(upper(name));
    if (it == values_.end() || it->second.empty())
        return std::nullopt;
    std::string v = std::move(it->second.front());
    it->second.pop_front();
    return v;
}

std::string substituteVariables(const std::string &text, VariableSource &source,
                                std::map<std::string, std::string> *cache,
                                const std::function<void(const std::string &)> &prompt) {
    std::string out;
    for (size_t i = 0; i < text.size();) {
        if (text[i] != '&' || i + 1 >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i + 1]))) {
            out += text[i++];
            continue;
        }
        size_t end = i + 1;
        while (end < text.size() && isNameChar(text[end]))
            ++end;
        std::string name = upper(text.substr(i + 1, end - i - 1));
        if (prompt)
            prompt("Enter value for " + lower(name) + ": ");
        auto value = source.next(name);
        if (!value)
            throw MissingBinding(name);
        if (cache)
            (*cache)[name] = *value;
        out += *value;
        i = end;
    }
    return out;
}

std::string renderResultSet(const ResultSet &rs) {
    if (rs.rows.empty())
        return "no rows selected\n";
    size_t n = rs.headers.size();
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> width(n);
    for (size_t c = 0; c < n; ++c)
        width[c] = rs.headers[c].size();
    for (const Row &row : rs.rows) {
        std::vector<std::string> line;
        for (size_t c = 0; c < n; ++c) {
            line.push_back(displayValue(row[c]));
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }

    auto emit = [&](const std::vector<std::string> &fields) {
        std::string line;
        for (size_t c = 0; c < n; ++c)
            line += (c ? " " : "") + padTo(fields[c], width[c], rs.numeric[c]);
        return rtrim(line) + "\n";
    };
    std::string out = emit(rs.headers);
    std::vector<std::string> rule;
    for (size_t c = 0; c < n; ++c)
        rule.push_back(std::string(width[c], '-'));
    out += emit(rule);
    for (const auto &line : cells)
        out += emit(line);
    return out + "\n";
}

std::optional<std::pair<std::string, std::string>> parseBindDirective(const std::string &line) {
    std::string t = trim(line);
    const std::string prefix = "-- bind ";
    if (t.rfind(prefix, 0) != 0)
        return std::nullopt;
    std::string rest = t.substr(prefix.size());
    size_t eq = rest.find('=');
    if (eq == std::string::npos || eq == 0)
        return std::nullopt;
    return std::pair{upper(trim(rest.substr(0, eq))), rest.substr(eq + 1)};
}

// ---------------------------------------------------------------------------
// Session

Session::Session(Database &db, std::ostream &out, ShellOptions options) : db_(db), out_(out), options_(options) {}

void Session::prompt(int lineNumber) {
    if (!options_.quiet)
        out_ << promptFor(lineNumber) << std::flush;
}

void Session::echoLine(const std::string &line) {
    if (options_.echo && !options_.quiet)
        out_ << line << '\n';
}

void Session::render(const Outcome &outcome) {
    std::visit(
        [&](const auto &o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Feedback>)
                out_ << '\n' << o.text << "\n\n";
            else if constexpr (std::is_same_v<T, Listing>)
                out_ << o.text << '\n';
            else
                out_ << '\n' << renderResultSet(o) << (o.rows.empty() ? "\n" : "");
        },
        outcome);
}

void Session::execute(const RawStatement &stmt, VariableSource &source) {
    std::string text;
    try {
        text = substituteVariables(stmt.text(), source, &cache_, [&](const std::string &p) {
            if (!options_.quiet)
                out_ << p << std::flush;
        });
    } catch (const MissingBinding &e) {
        ++failures_;
        out_ << "\nERROR: " << e.what() << "; statement skipped.\n\n";
        return;
    }
    try {
        render(executeSql(db_, text));
    } catch (const OraError &e) {
        ++failures_;
        out_ << renderError(e) << "\n\n";
    }
}

namespace {

// Substitution values typed at the console, one line each.
class ConsoleSource : public VariableSource {
public:
    ConsoleSource(std::istream &in, std::function<void(const std::string &)> echo) : in_(in), echo_(std::move(echo)) {}

    std::optional<std::string> next(const std::string &) override {
        std::string line;
        if (!std::getline(in_, line))
            return std::nullopt;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        echo_(line);
        return line;
    }

private:
    std::istream &in_;
    std::function<void(const std::string &)> echo_;
};

// Script values: echoed after the prompt as if typed.
class ScriptSource : public VariableSource {
public:
    ScriptSource(BindingList &bindings, std::function<void(const std::string &)> echo)
        : bindings_(bindings), echo_(std::move(echo)) {}

    std::optional<std::string> next(const std::string &name) override {
        auto v = bindings_.next(name);
        if (v)
            echo_(*v);
        return v;
    }

private:
    BindingList &bindings_;
    std::function<void(const std::string &)> echo_;
};

} // namespace

void Session::runInteractive(std::istream &in, bool terminal) {
    StatementReader reader;
    auto echo = [&](const std::string &line) {
        if (!terminal)
            echoLine(line);
    };
    ConsoleSource source(in, echo);
    std::string line;
    if (terminal)
        prompt(1);
    while (std::getline(in, line)) {
        int number = reader.nextLineNumber();
        bool idleSkip = !reader.midStatement() && (trim(line).empty() || trim(line).rfind("--", 0) == 0);
        if (!terminal && !idleSkip) {
            prompt(number);
            echo(line);
        }
        if (auto stmt = reader.feed(line))
            execute(*stmt, source);
        if (terminal)
            prompt(reader.nextLineNumber());
    }
    if (terminal && !options_.quiet)
        out_ << '\n';
}

void Session::executeScripted(const RawStatement &stmt, BindingList &bindings) {
    ScriptSource source(bindings, [&](const std::string &v) { echoLine(v); });
    execute(stmt, source);
}

void Session::runScript(std::istream &in) {
    StatementReader reader;
    BindingList bindings;
    ScriptSource source(bindings, [&](const std::string &v) { echoLine(v); });
    std::string line;
    while (std::getline(in, line)) {
        if (!reader.midStatement()) {
            if (auto bind = parseBindDirective(line)) {
                bindings.add(bind->first, bind->second);
                continue;
            }
            std::string t = trim(line);
            if (t.empty() || t.rfind("--", 0) == 0)
                continue;
        }
        prompt(reader.nextLineNumber());
        echoLine(line);
        if (auto stmt = reader.feed(line))
            execute(*stmt, source);
    }
}

} // namespace handysql

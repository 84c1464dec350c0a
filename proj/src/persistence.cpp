#include "handysql/persistence.hpp"

#include "handysql/constraints.hpp"
#include "handysql/parser.hpp"
#include "handysql/render.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace handysql {

namespace {

std::string escapeText(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '\t':
            out += "\\t";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\\':
            out += "\\\\";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string encodeValue(const Value &v) {
    if (isNull(v))
        return "\\N";
    if (const auto *d = std::get_if<Decimal>(&v))
        return d->toString();
    if (const auto *s = std::get_if<std::string>(&v))
        return escapeText(*s);
    const Date &d = std::get<Date>(v);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

std::string_view kindWord(ConstraintKind k) {
    switch (k) {
    case ConstraintKind::PrimaryKey:
        return "PRIMARY";
    case ConstraintKind::Unique:
        return "UNIQUE";
    case ConstraintKind::Check:
        return "CHECK";
    case ConstraintKind::NotNull:
        return "NOTNULL";
    }
    return "CHECK";
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t end = s.find(sep, start);
        out.push_back(s.substr(start, end - start));
        if (end == std::string::npos)
            return out;
        start = end + 1;
    }
}

class Reader {
public:
    explicit Reader(std::string_view text) {
        std::string line;
        std::istringstream in{std::string(text)};
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            lines_.push_back(std::move(line));
        }
    }

    bool done() const { return next_ >= lines_.size(); }
    const std::string &peek() const { return lines_[next_]; }
    int lineNo() const { return static_cast<int>(next_) + 1; }
    std::string take() { return lines_[next_++]; }

    [[noreturn]] void fail(const std::string &what) const {
        throw SnapshotError("snapshot line " + std::to_string(std::min(next_ + 1, lines_.size())) + ": " + what);
    }

private:
    std::vector<std::string> lines_;
    size_t next_ = 0;
};

bool startsWith(const std::string &s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

Value decodeValue(const std::string &field, const Column &col, Reader &r) {
    if (field == "\\N")
        return Null{};
    if (std::holds_alternative<NumberType>(col.type)) {
        auto d = Decimal::parse(field);
        if (!d)
            r.fail("bad number '" + field + "' for column " + col.name);
        return *d;
    }
    if (std::holds_alternative<DateType>(col.type)) {
        int y = 0, m = 0, d = 0;
        char tail = 0;
        if (field.size() != 10 || std::sscanf(field.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &tail) != 3 ||
            !isValidDate(y, m, d))
            r.fail("bad date '" + field + "' for column " + col.name);
        return Date{y, m, d};
    }
    std::string out;
    for (size_t i = 0; i < field.size(); ++i) {
        if (field[i] != '\\') {
            out += field[i];
            continue;
        }
        if (++i >= field.size())
            r.fail("dangling escape in column " + col.name);
        switch (field[i]) {
        case 't':
            out += '\t';
            break;
        case 'n':
            out += '\n';
            break;
        case '\\':
            out += '\\';
            break;
        default:
            r.fail("unknown escape in column " + col.name);
        }
    }
    return out;
}

} // namespace

std::string serialize(const Database &db) {
    const Catalog &cat = db.catalog();
    std::ostringstream out;
    out << kSnapshotHeader << '\n';
    for (const TableSchema &t : cat.tables()) {
        out << "TABLE " << t.name << '\n';
        for (const Column &c : t.columns)
            out << "COL " << c.name << ' ' << typeDisplay(c.type) << ' ' << (c.notNull ? "NOTNULL" : "NULL") << '\n';
    }
    for (const ConstraintDef &c : cat.constraints()) {
        out << "CONSTRAINT " << c.name << ' ' << c.table << ' ' << kindWord(c.kind) << ' ';
        if (c.kind == ConstraintKind::Check) {
            out << renderPredicate(*c.check);
        } else {
            for (size_t i = 0; i < c.columns.size(); ++i)
                out << (i ? "," : "") << c.columns[i];
        }
        out << '\n';
    }
    out << "COUNTER " << cat.sysNameCounter() << '\n';
    for (const TableSchema &t : cat.tables()) {
        auto rows = db.rows(t.name);
        out << "ROWS " << t.name << ' ' << rows.size() << '\n';
        for (const Row &row : rows) {
            for (size_t i = 0; i < row.size(); ++i)
                out << (i ? "\t" : "") << encodeValue(row[i]);
            out << '\n';
        }
    }
    return out.str();
}

Database deserialize(std::string_view text) {
    Reader r(text);
    if (r.done() || r.take() != kSnapshotHeader)
        throw SnapshotError("not a snapshot file: expected header \"" + std::string(kSnapshotHeader) + "\"");

    Database db;
    Catalog &cat = db.catalog();
    std::vector<TableSchema> tables;
    std::vector<std::vector<bool>> declaredNotNull;

    while (!r.done() && startsWith(r.peek(), "TABLE ")) {
        std::string name = r.take().substr(6);
        if (name.empty() || Catalog::isBuiltin(name))
            r.fail("bad table name");
        for (const TableSchema &t : tables)
            if (t.name == name)
                r.fail("duplicate table " + name);
        TableSchema schema{name, {}};
        std::vector<bool> flags;
        while (!r.done() && startsWith(r.peek(), "COL ")) {
            auto parts = split(r.peek(), ' ');
            if (parts.size() != 4 || (parts[3] != "NULL" && parts[3] != "NOTNULL"))
                r.fail("malformed COL line");
            SqlType type;
            try {
                type = normalizeType(parseType(parts[2]));
            } catch (const OraError &) {
                r.fail("bad type " + parts[2]);
            }
            if (schema.columnIndex(parts[1]))
                r.fail("duplicate column " + parts[1]);
            schema.columns.push_back({parts[1], type, false});
            flags.push_back(parts[3] == "NOTNULL");
            r.take();
        }
        if (schema.columns.empty())
            r.fail("table " + name + " has no columns");
        tables.push_back(schema);
        declaredNotNull.push_back(std::move(flags));
        cat.restoreTable(std::move(schema));
    }

    std::vector<ConstraintDef> defs;
    std::set<std::string> names;
    while (!r.done() && startsWith(r.peek(), "CONSTRAINT ")) {
        std::string line = r.peek();
        auto parts = split(line, ' ');
        if (parts.size() < 5)
            r.fail("malformed CONSTRAINT line");
        ConstraintDef def{parts[1], parts[2], ConstraintKind::Check, {}, std::nullopt};
        const TableSchema *t = cat.findTable(def.table);
        if (!t)
            r.fail("constraint " + def.name + " names unknown table " + def.table);
        if (!names.insert(def.name).second)
            r.fail("duplicate constraint name " + def.name);
        std::string detail = line.substr(parts[0].size() + parts[1].size() + parts[2].size() + parts[3].size() + 4);
        const std::string &kind = parts[3];
        if (kind == "CHECK") {
            try {
                def.check = parsePredicate(detail);
                resolvePredicate(*def.check, Scope(*t));
            } catch (const OraError &e) {
                r.fail("bad CHECK predicate for " + def.name + ": " + e.oraLine());
            }
        } else {
            if (kind == "PRIMARY")
                def.kind = ConstraintKind::PrimaryKey;
            else if (kind == "UNIQUE")
                def.kind = ConstraintKind::Unique;
            else if (kind == "NOTNULL")
                def.kind = ConstraintKind::NotNull;
            else
                r.fail("unknown constraint kind " + kind);
            def.columns = split(detail, ',');
            for (const std::string &col : def.columns)
                if (!t->columnIndex(col))
                    r.fail("constraint " + def.name + " names unknown column " + col);
            if (def.kind == ConstraintKind::NotNull && def.columns.size() != 1)
                r.fail("NOTNULL constraint " + def.name + " must name one column");
            if (def.kind == ConstraintKind::PrimaryKey && cat.primaryKeyOf(def.table))
                r.fail("second primary key on " + def.table);
        }
        r.take();
        defs.push_back(def);
        cat.restoreConstraint(std::move(def));
    }

    if (r.done() || !startsWith(r.peek(), "COUNTER "))
        r.fail("expected COUNTER line");
    {
        std::string value = r.take().substr(8);
        try {
            size_t used = 0;
            int counter = std::stoi(value, &used);
            if (used != value.size() || counter < 0)
                throw std::invalid_argument(value);
            cat.restoreSysNameCounter(counter);
        } catch (const std::exception &) {
            r.fail("bad COUNTER value");
        }
    }

    for (size_t ti = 0; ti < tables.size(); ++ti) {
        const TableSchema &schema = *cat.findTable(tables[ti].name);
        for (size_t c = 0; c < schema.columns.size(); ++c)
            if (schema.columns[c].notNull != declaredNotNull[ti][c])
                throw SnapshotError("column " + schema.name + "." + schema.columns[c].name +
                                    " nullability disagrees with its constraints");
    }

    std::set<std::string> seenRows;
    while (!r.done()) {
        auto header = split(r.peek(), ' ');
        if (header.size() != 3 || header[0] != "ROWS")
            r.fail("expected ROWS section");
        const TableSchema *t = cat.findTable(header[1]);
        if (!t)
            r.fail("rows for unknown table " + header[1]);
        if (!seenRows.insert(t->name).second)
            r.fail("second ROWS section for " + t->name);
        size_t count = 0;
        try {
            count = std::stoul(header[2]);
        } catch (const std::exception &) {
            r.fail("bad row count");
        }
        r.take();
        std::vector<Row> rows;
        for (size_t i = 0; i < count; ++i) {
            if (r.done())
                r.fail("missing rows for " + t->name);
            auto fields = split(r.peek(), '\t');
            if (fields.size() != t->columns.size())
                r.fail("row has " + std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(t->columns.size()));
            Row row;
            for (size_t c = 0; c < fields.size(); ++c) {
                Value v = decodeValue(fields[c], t->columns[c], r);
                try {
                    if (!(coerce(v, t->columns[c].type) == v))
                        r.fail("value does not fit column " + t->columns[c].name);
                } catch (const OraError &e) {
                    r.fail("column " + t->columns[c].name + ": " + e.oraLine());
                }
                row.push_back(std::move(v));
            }
            r.take();
            rows.push_back(std::move(row));
        }
        // Re-validate every constraint over the rows exactly as stored.
        for (const ConstraintDef *def : cat.constraintsOf(t->name)) {
            if (auto v = validateExisting(*t, *def, rows))
                throw SnapshotError("constraint " + def->name + " violated by row " + std::to_string(v->row + 1) +
                                    " of " + t->name);
        }
        db.replaceRows(t->name, std::move(rows));
    }
    return db;
}

void save(const Database &db, const std::filesystem::path &path) {
    std::string text = serialize(db);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw SnapshotError("cannot write " + path.string());
    out << text;
    out.flush();
    if (!out)
        throw SnapshotError("write failed for " + path.string());
}

Database load(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SnapshotError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

bool equivalent(const Database &a, const Database &b) {
    const Catalog &ca = a.catalog(), &cb = b.catalog();
    if (ca.tables() != cb.tables() || ca.constraints() != cb.constraints() ||
        ca.sysNameCounter() != cb.sysNameCounter())
        return false;
    for (const TableSchema &t : ca.tables()) {
        auto ra = a.rows(t.name), rb = b.rows(t.name);
        if (!std::equal(ra.begin(), ra.end(), rb.begin(), rb.end()))
            return false;
    }
    return true;
}

} // namespace handysql

#include "common.hpp"

#include "handysql/shell.hpp"
#include "handysql/transcript.hpp"

#include <sstream>

using namespace handysql;
using namespace testing;

namespace {

std::vector<RawStatement> readAll(const std::vector<std::string> &lines) {
    StatementReader r;
    std::vector<RawStatement> out;
    for (const auto &l : lines)
        if (auto s = r.feed(l))
            out.push_back(*s);
    return out;
}

std::vector<std::string> linesOf(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

} // namespace

TEST_SUITE("shell") {

TEST_CASE("statement reader") {
    SUBCASE("six-line CREATE") {
        auto s = readAll({"CREATE TABLE STUDENTS(S_ROLL NUMBER(2),", "S_NAME VARCHAR(20),", "S_ADDRESS VARCHAR(20),",
                          "S_PHONE NUMBER(10),", "DOB DATE,", "S_MARKS INTEGER);"});
        REQUIRE(s.size() == 1);
        CHECK(s[0].lines.size() == 6);
        CHECK(s[0].lines.back() == "S_MARKS INTEGER)");
    }
    SUBCASE("single line") {
        auto s = readAll({"DESC STUDENTS;"});
        REQUIRE(s.size() == 1);
        CHECK(s[0].text() == "DESC STUDENTS");
    }
    SUBCASE("DESC needs no terminator") {
        auto s = readAll({"desc students"});
        REQUIRE(s.size() == 1);
    }
    SUBCASE("slash terminator") {
        auto s = readAll({"SELECT 1 FROM DUAL", "/"});
        REQUIRE(s.size() == 1);
        CHECK(s[0].text() == "SELECT 1 FROM DUAL");
    }
    SUBCASE("slash alone re-runs the last statement") {
        auto s = readAll({"SELECT 1 FROM DUAL;", "/"});
        REQUIRE(s.size() == 2);
        CHECK(s[0] == s[1]);
    }
    SUBCASE("blank and comment lines between statements") {
        auto s = readAll({"", "-- hello", "SELECT 1 FROM DUAL;"});
        REQUIRE(s.size() == 1);
    }
    SUBCASE("semicolon followed by spaces") {
        auto s = readAll({"SELECT 1 FROM DUAL;   "});
        REQUIRE(s.size() == 1);
    }
}

TEST_CASE("prompts") {
    CHECK(promptFor(1) == "SQL> ");
    CHECK(promptFor(2) == "  2  ");
    CHECK(promptFor(12) == " 12  ");
}

TEST_CASE("substitution") {
    const std::string tmpl = "INSERT INTO STUDENTS VALUES(&S_ROLL, '&S_NAME', '&S_ADDRESS', &S_PHONE, '&DATE', &S_MARKS)";
    BindingList b({{"S_ROLL", "3"}, {"S_NAME", "TANISH"}, {"S_ADDRESS", "KURLA"}, {"S_PHONE", "226153253"},
                   {"DATE", "24-JUL-92"}, {"S_MARKS", "79"}});
    std::vector<std::string> prompts;
    std::string out = substituteVariables(tmpl, b, nullptr, [&](const std::string &p) { prompts.push_back(p); });
    CHECK(out == "INSERT INTO STUDENTS VALUES(3, 'TANISH', 'KURLA', 226153253, '24-JUL-92', 79)");
    REQUIRE(prompts.size() == 6);
    CHECK(prompts[0] == "Enter value for s_roll: ");
    CHECK(b.empty());

    Database db = fixture("schema");
    CHECK(feedback(db, out) == "1 row created.");

    BindingList none;
    CHECK(substituteVariables("SELECT 1 FROM DUAL", none) == "SELECT 1 FROM DUAL");

    SUBCASE("same name twice prompts twice and the second value wins") {
        BindingList twice({{"X", "1"}, {"X", "2"}});
        std::map<std::string, std::string> cache;
        int asked = 0;
        CHECK(substituteVariables("&X + &x", twice, &cache, [&](const std::string &) { ++asked; }) == "1 + 2");
        CHECK(asked == 2);
        CHECK(cache["X"] == "2");
    }
    SUBCASE("missing value") {
        BindingList empty;
        CHECK_THROWS_AS(substituteVariables("&NOPE", empty), MissingBinding);
    }
    SUBCASE("ampersand not followed by a letter is literal") {
        BindingList empty;
        CHECK(substituteVariables("'a & b'", empty) == "'a & b'");
    }
}

TEST_CASE("bind directives") {
    CHECK(parseBindDirective("-- bind s_roll=3") == std::pair<std::string, std::string>{"S_ROLL", "3"});
    CHECK(parseBindDirective("-- bind DATE=24-JUL-92") == std::pair<std::string, std::string>{"DATE", "24-JUL-92"});
    CHECK_FALSE(parseBindDirective("-- note: bind x=1"));
}

TEST_CASE("result set rendering") {
    ResultSet count{{"TOAL_MARKS"}, {true}, {{num(7)}}};
    CHECK(renderResultSet(count) == "TOAL_MARKS\n----------\n         7\n\n");

    ResultSet empty{{"CONSTRAINT_NAME"}, {false}, {}};
    CHECK(renderResultSet(empty) == "no rows selected\n");

    ResultSet mixed{{"N", "NAME"}, {true, false}, {{num(12), std::string("AB")}, {Null{}, std::string("ABCDE")}}};
    CHECK(renderResultSet(mixed) == " N NAME\n-- -----\n12 AB\n   ABCDE\n\n");

    Database db = fixture("students");
    auto join = select(db, "SELECT * FROM STUDENTS S, COURSE C WHERE S.S_ROLL=C.C_SROLL");
    std::string text = renderResultSet(join);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
    CHECK(text.rfind("S_ROLL S_NAME S_ADDRESS    S_PHONE DOB       S_MARKS C_ID C_NAME C_SROLL\n", 0) == 0);
}

TEST_CASE("script mode") {
    Database db;
    std::ostringstream out;
    Session s(db, out);
    std::istringstream in("CREATE TABLE T (A NUMBER(2));\n"
                          "-- bind a=5\n"
                          "INSERT INTO T VALUES (&A);\n"
                          "SELECT A\n"
                          "FROM T;\n");
    s.runScript(in);
    CHECK(s.failures() == 0);
    CHECK(out.str() == "SQL> CREATE TABLE T (A NUMBER(2));\n"
                       "\nTable created.\n\n"
                       "SQL> INSERT INTO T VALUES (&A);\n"
                       "Enter value for a: 5\n"
                       "\n1 row created.\n\n"
                       "SQL> SELECT A\n"
                       "  2  FROM T;\n"
                       "\nA\n-\n5\n\n");
}

TEST_CASE("failures are counted and reported") {
    Database db;
    std::ostringstream out;
    Session s(db, out, ShellOptions{true, true});
    std::istringstream in("INSERT INTO T VALUES (1,);\nSELECT * FROM NOPE;\nINSERT INTO T VALUES (&MISSING);\n");
    s.runScript(in);
    CHECK(s.failures() == 3);
    CHECK(out.str().find("ORA-00936") != std::string::npos);
    CHECK(out.str().find("ORA-00942") != std::string::npos);
    CHECK(out.str().find("no value supplied for substitution variable MISSING") != std::string::npos);
    CHECK(out.str().find("SQL>") == std::string::npos);
}

TEST_CASE("interactive and script transcripts agree") {
    const std::string body = "CREATE TABLE T (A NUMBER(2),\nB VARCHAR(3));\nINSERT INTO T VALUES (&A, 'x');\n"
                             "SELECT * FROM T;\nDESC T\n";
    Database a, b;
    std::ostringstream fromScript, fromConsole;
    {
        Session s(a, fromScript);
        std::istringstream in("-- bind a=4\n" + body);
        s.runScript(in);
    }
    {
        Session s(b, fromConsole);
        // Piped console input: the substitution value is the next input line.
        std::istringstream in("CREATE TABLE T (A NUMBER(2),\nB VARCHAR(3));\nINSERT INTO T VALUES (&A, 'x');\n4\n"
                              "SELECT * FROM T;\nDESC T\n");
        s.runInteractive(in, false);
    }
    CHECK(fromScript.str().find("Enter value for a: 4") != std::string::npos);
    CHECK(normalizeBlock(linesOf(fromScript.str())) == normalizeBlock(linesOf(fromConsole.str())));
    CHECK(equivalent(a, b));
}

} // TEST_SUITE

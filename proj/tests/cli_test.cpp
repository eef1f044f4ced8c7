#include "hfkit/error.hpp"
#include "hfkit/expr.hpp"
#include "hfkit/oracle.hpp"
#include "hfkit/session.hpp"
#include "hfkit/suites.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace hfkit;

namespace {

std::string eval_text(const std::string& line, OutputFormat fmt = OutputFormat::Text)
{
    Session s(fmt);
    std::ostringstream out;
    s.run_line(line, 1, out);
    return out.str();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args)
{
    const int status = std::system((std::string(HFKIT_BIN) + " " + args).c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Expr random_expr(oracle::Rng& rng, int depth)
{
    static const char* unary[] = {"canon", "rank", "ord?", "transitive?", "phi", "psi", "tomewo", "tov", "dot", "json"};
    static const char* binary[] = {"in", "sub", "eq"};
    switch (depth == 0 ? rng.below(3) : rng.below(6)) {
    case 0:
        return Expr::empty_set();
    case 1:
        return Expr::numeral(rng.below(12));
    case 2:
        return Expr::ident("x" + std::to_string(rng.below(3)));
    case 3: {
        std::vector<Expr> members;
        for (std::size_t i = 0, n = 1 + rng.below(3); i < n; ++i) members.push_back(random_expr(rng, depth - 1));
        return Expr::braces(std::move(members));
    }
    case 4:
        return Expr::op(unary[rng.below(10)], {random_expr(rng, depth - 1)});
    default:
        return Expr::op(binary[rng.below(3)], {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    }
}

} // namespace

TEST_CASE("parsing brace notation")
{
    CHECK(parse("{}") == Expr::empty_set());
    CHECK(parse("{{},{{}}}") == Expr::braces({Expr::empty_set(), Expr::braces({Expr::empty_set()})}));
    CHECK(parse("2 in 3") == Expr::op("in", {Expr::numeral(2), Expr::numeral(3)}));
    CHECK(parse("in 2 3") == parse("2 in 3"));
    CHECK(parse("rank (x)") == Expr::op("rank", {Expr::ident("x")}));
    CHECK(parse("ord { size: 1; lt: }").kind == Expr::Kind::OrdLit);
    CHECK(parse("mewo { elems: a; lt: ; marked: a }").kind == Expr::Kind::MewoLit);
}

TEST_CASE("parse errors carry position and expected tokens")
{
    try {
        (void)parse("{,");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 2);
        CHECK(e.expected().front() == "'{'");
    }
    try {
        (void)parse("{}\n{} {}");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }
    CHECK_THROWS_AS(parse("let"), ParseError);
    CHECK_THROWS_AS(parse("rank"), ParseError);
    CHECK_THROWS_AS(parse("{{}"), ParseError);
    CHECK_THROWS_AS(parse_line("let rank = 2"), ParseError);
}

TEST_CASE("printing then parsing gives the same tree")
{
    CHECK(print(parse("in (2 in 3) 4")) == "(2 in 3) in 4");
    CHECK(print(parse("rank psi {  {}, 3 }")) == "rank psi {{},3}");
    oracle::Rng rng(99);
    for (int i = 0; i < 2000; ++i) {
        const Expr e = random_expr(rng, 4);
        CHECK(parse(print(e)) == e);
    }
    const auto stmts = parse_line("let a = {1}; a sub 2");
    REQUIRE(stmts.size() == 2);
    CHECK(print(stmts[0]) == "let a = {1}");
    CHECK(parse_line(print(stmts[0]) + "; " + print(stmts[1])) == stmts);
}

TEST_CASE("evaluation")
{
    CHECK(eval_text("rank {{{}}}") == "2\n");
    CHECK(eval_text("ord? {{},{{}},{{{}}}}") == "false\n");
    CHECK(eval_text("ord? {{},{{}}}") == "true\n");
    CHECK(eval_text("2 in 3") == "true\n");
    CHECK(eval_text("3 in 2") == "false\n");
    CHECK(eval_text("1 sub 3") == "true\n");
    CHECK(eval_text("transitive? {{{}}}") == "false\n");
    CHECK(eval_text("canon {3, 0, {}}") == "{{},{{},{{}},{{},{{}}}}}\n");
    CHECK(eval_text("psi {{{}}}") == "ord { size: 2; lt: 0<1 }\n");
    CHECK(eval_text("phi ord { size: 3; lt: 1<0, 2<0, 2<1 }") == "{{},{{}},{{},{{}}}}\n");
    CHECK(eval_text("canon ord { size: 2; lt: 1<0 }") == "ord { size: 2; lt: 0<1 }\n");
    CHECK(eval_text("tomewo {{{}}}") == "mewo { elems: e0 e1; lt: e0<e1; marked: e1 }\n");
    CHECK(eval_text("tov mewo { elems: a b; lt: a<b; marked: b }") == "{{{}}}\n");
    CHECK(eval_text("tov tomewo 4 eq 4") == "true\n");
    CHECK(eval_text("eq (psi 3) (psi {{{{}}}})") == "true\n");
    CHECK(eval_text("let x = {1, 2}; rank x; x in {x}") == "3\ntrue\n");
    CHECK(eval_text("json 2") == R"({"nodes":[[],[0],[0,1]],"root":2})" "\n");
    CHECK(eval_text("1", OutputFormat::Json) == R"({"nodes":[[],[0]],"root":1})" "\n");
    CHECK(eval_text("1", OutputFormat::Dot) ==
          "digraph set {\n  s0 [label=\"{}\"];\n  s1 [label=\"{{}}\"];\n  s0 -> s1;\n}\n");
}

TEST_CASE("evaluation errors")
{
    CHECK(eval_text("phi {}") == "error: 1: phi: expected an ordinal (use tov for mewos), got a set\n");
    CHECK(eval_text("rank psi 2") == "error: 1: rank: expected a set, got an ordinal\n");
    CHECK(eval_text("y") == "error: 1: unbound name 'y'\n");
    CHECK(eval_text("let x = 1; let x = 2") == "error: 1: 'x' is already bound\n");
    CHECK(eval_text("{,") == "error: 1:2: expected one of '{', numeral, identifier, '(', command, 'ord', 'mewo' but "
                             "found ','\n");
    CHECK(eval_text("eq 1 (psi 1)") == "error: 1: eq: cannot compare set with ordinal\n");
    CHECK(eval_text("tomewo mewo { elems: a; lt: ; marked: }") == "mewo { elems: e0; lt: ; marked: }\n");
    CHECK(eval_text("tov tomewo {}") == "{}\n");
}

TEST_CASE("session bindings persist across lines")
{
    Session s;
    std::istringstream in("let a = 3\n# comment\n\nlet b = {a}\nb\nrank b\nc\n2 in a\n");
    std::ostringstream out;
    CHECK_FALSE(s.run_stream(in, out));
    CHECK(out.str() == "{{{},{{}},{{},{{}}}}}\n4\nerror: 7: unbound name 'c'\ntrue\n");
    CHECK(s.bindings().size() == 2);
}

TEST_CASE("suite names and reports")
{
    CHECK(is_suite("all"));
    CHECK_FALSE(is_suite("nope"));
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
    const SuiteConfig cfg{42, 2, 3};
    const auto a = suite_report_json("counterexamples", cfg, run_suite("counterexamples", cfg));
    const auto b = suite_report_json("counterexamples", cfg, run_suite("counterexamples", cfg));
    CHECK(a == b);
    CHECK(a.find("\"failures\": []") != std::string::npos);
    CHECK(a.find("\"seed\": 42") != std::string::npos);
}

TEST_CASE("small 'all' suite is deterministic and passes")
{
    const SuiteConfig cfg{7, 2, 3};
    const auto r1 = run_suite("all", cfg);
    const auto r2 = run_suite("all", cfg);
    CHECK(suite_report_json("all", cfg, r1) == suite_report_json("all", cfg, r2));
    for (const auto& r : r1) {
        INFO(r.name());
        CHECK(r.passed());
        CHECK(r.cases() > 0);
    }
}

TEST_CASE("command line exit codes")
{
    CHECK(run_cli("check --suite counterexamples > /dev/null") == 0);
    CHECK(run_cli("check --suite nope > /dev/null 2>&1") == 2);
    CHECK(run_cli("check > /dev/null 2>&1") == 2);
    CHECK(run_cli("frobnicate > /dev/null 2>&1") == 2);
    CHECK(run_cli("eval '2 in 3' > /dev/null") == 0);
    CHECK(run_cli("eval 'phi 3' > /dev/null") == 1);
}

TEST_CASE("batch and repl output are identical")
{
    const std::string script = "cli_script.hfk";
    {
        std::ofstream f(script);
        f << "let a = {1, {2}}\n" << "a\n" << "rank a\n" << "ord? a\n" << "{,\n" << "psi a\n" << "tomewo a\n"
          << "dot tomewo 2\n" << "json psi 2\n" << "let a = 0\n" << "transitive? a\n";
    }
    CHECK(run_cli("run " + script + " > cli_batch.out") == 1);
    CHECK(run_cli("repl < " + script + " > cli_repl.out") == 1);
    CHECK(slurp("cli_batch.out") == slurp("cli_repl.out"));
    CHECK(slurp("cli_batch.out").find("error: 5:2:") != std::string::npos);
    CHECK(run_cli("run --format json " + script + " > cli_batch.json") == 1);
    CHECK(run_cli("repl --format json < " + script + " > cli_repl.json") == 1);
    CHECK(slurp("cli_batch.json") == slurp("cli_repl.json"));
}

TEST_CASE("loading mewo and ordinal files")
{
    {
        std::ofstream f("cli_load.mewo");
        f << "# a two-chain\nmewo {\n  elems: bottom top;\n  lt: bottom<top;\n  marked: top\n}\n";
    }
    {
        std::ofstream f("cli_load.json");
        f << R"({"size": 2, "pairs": [[1, 0]]})";
    }
    CHECK(run_cli("load cli_load.mewo > cli_load.out") == 0);
    CHECK(slurp("cli_load.out") == "mewo { elems: e0 e1; lt: e0<e1; marked: e1 }\n");
    CHECK(run_cli("load --format json cli_load.mewo > cli_load.out") == 0);
    CHECK(slurp("cli_load.out") == R"({"lt":[[0,1]],"marked":[1],"size":2})" "\n");
    CHECK(run_cli("load cli_load.json > cli_load.out") == 0);
    CHECK(slurp("cli_load.out") == "ord { size: 2; lt: 1<0 }\n");
    {
        std::ofstream f("cli_bad.mewo");
        f << "mewo { elems: a b; lt: ; marked: }\n";
    }
    CHECK(run_cli("load cli_bad.mewo > /dev/null 2>&1") == 1);
}

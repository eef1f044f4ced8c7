// hfkit command line: evaluate set expressions, run scripts, load ordinal
// and mewo files, and run the property suites.

#include "hfkit/error.hpp"
#include "hfkit/mewo.hpp"
#include "hfkit/ordinal.hpp"
#include "hfkit/session.hpp"
#include "hfkit/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

constexpr int exit_usage = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw hfkit::Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int load(const std::string& path, const std::string& input_format, hfkit::OutputFormat out)
{
    const std::string text = read_file(path);
    std::string fmt = input_format;
    if (fmt == "auto") {
        const auto first = text.find_first_not_of(" \t\r\n");
        fmt = (first != std::string::npos && text[first] == '{') ? "json" : "text";
    }
    hfkit::Value v;
    if (fmt == "json") {
        // A mewo document carries "marked"; an ordinal document carries "pairs".
        if (text.find("\"marked\"") != std::string::npos) v = hfkit::mewo_from_json(text);
        else v = hfkit::ord_from_json(text);
    } else {
        hfkit::Lexer lex(text);
        if (lex.peek().text == "ord") v = hfkit::parse_ord(lex);
        else v = hfkit::parse_mewo(lex);
        lex.expect(hfkit::TokenKind::End);
    }
    hfkit::Session session(out);
    std::cout << session.render(v) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hfkit: hereditarily finite sets, finite ordinals and mewos"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    };

    auto* eval = app.add_subcommand("eval", "Evaluate statements given as arguments, one line each");
    std::vector<std::string> lines;
    eval->add_option("statements", lines, "Statements")->required();
    add_format(eval);

    auto* run = app.add_subcommand("run", "Run a script file line by line");
    std::string script;
    run->add_option("file", script, "Script")->required()->check(CLI::ExistingFile);
    add_format(run);

    auto* repl = app.add_subcommand("repl", "Read statements from standard input");
    add_format(repl);

    auto* check = app.add_subcommand("check", "Run a property suite and print a JSON report");
    std::string suite;
    hfkit::SuiteConfig cfg;
    check->add_option("--suite", suite, "ordinals, sets, mewos, correspondence, counterexamples or all")->required();
    check->add_option("--seed", cfg.seed, "Seed for generated cases");
    check->add_option("--max-size", cfg.max_size, "Bound on exhaustive enumerations");
    check->add_option("--max-depth", cfg.max_depth, "Depth of generated sets");

    auto* loader = app.add_subcommand("load", "Load an ordinal or mewo file and print it");
    std::string path;
    std::string input_format = "auto";
    loader->add_option("file", path, "Input file")->required()->check(CLI::ExistingFile);
    loader->add_option("--input", input_format, "Input format")->check(CLI::IsMember({"auto", "text", "json"}));
    add_format(loader);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const auto out = hfkit::parse_output_format(format);
        if (*eval) {
            hfkit::Session session(out);
            bool ok = true;
            for (std::size_t i = 0; i < lines.size(); ++i) ok = session.run_line(lines[i], i + 1, std::cout) && ok;
            return ok ? 0 : 1;
        }
        if (*run) {
            std::ifstream in(script);
            hfkit::Session session(out);
            return session.run_stream(in, std::cout) ? 0 : 1;
        }
        if (*repl) {
            hfkit::Session session(out);
            const char* prompt = isatty(STDIN_FILENO) ? "hfkit> " : nullptr;
            return session.run_stream(std::cin, std::cout, prompt) ? 0 : 1;
        }
        if (*check) {
            if (!hfkit::is_suite(suite)) {
                std::cerr << "unknown suite '" << suite << "'\n";
                return exit_usage;
            }
            const auto results = hfkit::run_suite(suite, cfg);
            std::cout << hfkit::suite_report_json(suite, cfg, results) << '\n';
            for (const auto& r : results)
                if (!r.passed()) return 1;
            return 0;
        }
        if (*loader) return load(path, input_format, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_usage;
}

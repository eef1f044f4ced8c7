#include "hfkit/session.hpp"

#include "hfkit/correspondence.hpp"
#include "hfkit/error.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace hfkit {

namespace {

std::string with_article(const std::string& noun)
{
    return (noun == "ordinal" ? "an " : "a ") + noun;
}

} // namespace

OutputFormat parse_output_format(const std::string& name)
{
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "dot") return OutputFormat::Dot;
    throw Error("unknown output format '" + name + "' (expected text, json or dot)");
}

std::string type_name(const Value& v)
{
    static const char* names[] = {"set", "ordinal", "mewo", "boolean", "natural", "text"};
    return names[v.index()];
}

std::string set_to_dot(const SetUniverse& u, SetHandle h)
{
    const auto nodes = canonical_closure(u, h);
    std::ostringstream os;
    os << "digraph set {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        os << "  s" << i << " [label=\"" << format_set(u, nodes[i]) << "\"];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (u.mem(nodes[j], nodes[i])) os << "  s" << j << " -> s" << i << ";\n";
    os << "}\n";
    return os.str();
}

std::string ord_to_dot(const FinOrd& a)
{
    std::ostringstream os;
    os << "digraph ord {\n";
    for (std::size_t i = 0; i < a.size(); ++i) os << "  " << i << ";\n";
    for (const auto& [i, j] : a.lt().pairs()) os << "  " << i << " -> " << j << ";\n";
    os << "}\n";
    return os.str();
}

Session::Session(OutputFormat format) : format_(format), universe_(SetUniverse::node_limit_from_env()) {}

SetHandle Session::as_set(const Value& v, const std::string& cmd) const
{
    if (const auto* h = std::get_if<SetHandle>(&v)) return *h;
    throw EvalError(cmd + ": expected a set, got " + with_article(type_name(v)));
}

Value Session::eval(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::EmptySet:
        return universe_.empty_set();
    case Expr::Kind::Braces: {
        std::vector<SetHandle> members;
        for (const auto& a : e.args) members.push_back(as_set(eval(a), "{...}"));
        return universe_.mk_set(members);
    }
    case Expr::Kind::Numeral:
        return universe_.von_neumann(e.number);
    case Expr::Kind::Ident: {
        auto it = bindings_.find(e.name);
        if (it == bindings_.end()) throw EvalError("unbound name '" + e.name + "'");
        return it->second;
    }
    case Expr::Kind::OrdLit:
        return e.ord;
    case Expr::Kind::MewoLit:
        return e.mewo;
    case Expr::Kind::Op:
        break;
    }

    std::vector<Value> args;
    for (const auto& a : e.args) args.push_back(eval(a));
    const std::string& cmd = e.name;
    auto wrong = [&](const Value& v, const std::string& wanted) -> EvalError {
        return EvalError(cmd + ": expected " + wanted + ", got " + with_article(type_name(v)));
    };

    if (cmd == "canon") {
        if (std::holds_alternative<SetHandle>(args[0])) return args[0];
        if (const auto* a = std::get_if<FinOrd>(&args[0])) return canonical_form(*a);
        throw wrong(args[0], "a set or an ordinal");
    }
    if (cmd == "rank") return universe_.rank_nat(as_set(args[0], cmd));
    if (cmd == "ord?") {
        if (std::holds_alternative<FinOrd>(args[0])) return true;
        return universe_.is_st_ordinal(as_set(args[0], cmd));
    }
    if (cmd == "transitive?") return universe_.is_transitive_set(as_set(args[0], cmd));
    if (cmd == "in") return universe_.mem(as_set(args[0], cmd), as_set(args[1], cmd));
    if (cmd == "sub") return universe_.subset(as_set(args[0], cmd), as_set(args[1], cmd));
    if (cmd == "phi") {
        if (const auto* a = std::get_if<FinOrd>(&args[0])) return phi_ord(*a, universe_);
        throw wrong(args[0], "an ordinal (use tov for mewos)");
    }
    if (cmd == "psi") return psi_ord(universe_, as_set(args[0], cmd));
    if (cmd == "tomewo") {
        if (const auto* a = std::get_if<FinOrd>(&args[0])) return from_ordinal(*a);
        if (std::holds_alternative<Mewo>(args[0])) return args[0];
        return psi_mewo(universe_, as_set(args[0], cmd));
    }
    if (cmd == "tov") {
        if (const auto* m = std::get_if<Mewo>(&args[0])) return phi_mewo(*m, universe_);
        if (const auto* a = std::get_if<FinOrd>(&args[0])) return phi_ord(*a, universe_);
        throw wrong(args[0], "a mewo or an ordinal");
    }
    if (cmd == "eq") {
        const Value& x = args[0];
        const Value& y = args[1];
        if (x.index() != y.index())
            throw EvalError("eq: cannot compare " + type_name(x) + " with " + type_name(y));
        if (const auto* m = std::get_if<Mewo>(&x)) return mewo_equal(*m, std::get<Mewo>(y), universe_);
        if (const auto* a = std::get_if<FinOrd>(&x)) return equivalent(*a, std::get<FinOrd>(y));
        return x == y;
    }
    if (cmd == "dot") {
        if (const auto* h = std::get_if<SetHandle>(&args[0])) return set_to_dot(universe_, *h);
        if (const auto* a = std::get_if<FinOrd>(&args[0])) return ord_to_dot(*a);
        if (const auto* m = std::get_if<Mewo>(&args[0])) return to_dot(*m);
        throw wrong(args[0], "a set, an ordinal or a mewo");
    }
    if (cmd == "json") {
        if (const auto* h = std::get_if<SetHandle>(&args[0])) return export_slice_json(universe_, *h);
        if (const auto* a = std::get_if<FinOrd>(&args[0])) return to_json(*a);
        if (const auto* m = std::get_if<Mewo>(&args[0])) return to_json(*m);
        throw wrong(args[0], "a set, an ordinal or a mewo");
    }
    throw EvalError("unknown command '" + cmd + "'");
}

std::string Session::render(const Value& v) const
{
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const auto* n = std::get_if<std::size_t>(&v)) return std::to_string(*n);
    if (const auto* s = std::get_if<std::string>(&v)) {
        std::string out = *s;
        while (!out.empty() && out.back() == '\n') out.pop_back();
        return out;
    }
    std::string out;
    switch (format_) {
    case OutputFormat::Text:
        if (const auto* h = std::get_if<SetHandle>(&v)) return format_set(universe_, *h);
        if (const auto* a = std::get_if<FinOrd>(&v)) return to_text(*a);
        return to_text(std::get<Mewo>(v));
    case OutputFormat::Json:
        if (const auto* h = std::get_if<SetHandle>(&v)) return export_slice_json(universe_, *h);
        if (const auto* a = std::get_if<FinOrd>(&v)) return to_json(*a);
        return to_json(std::get<Mewo>(v));
    case OutputFormat::Dot:
        if (const auto* h = std::get_if<SetHandle>(&v)) out = set_to_dot(universe_, *h);
        else if (const auto* a = std::get_if<FinOrd>(&v)) out = ord_to_dot(*a);
        else out = to_dot(std::get<Mewo>(v));
        while (!out.empty() && out.back() == '\n') out.pop_back();
        return out;
    }
    return out;
}

void Session::execute(const Stmt& s, std::ostream& out)
{
    if (s.let) {
        if (bindings_.count(*s.let)) throw EvalError("'" + *s.let + "' is already bound");
        Value v = eval(s.expr);
        bindings_.emplace(*s.let, std::move(v));
        return;
    }
    out << render(eval(s.expr)) << '\n';
}

bool Session::run_line(const std::string& line, std::size_t line_number, std::ostream& out)
{
    std::vector<Stmt> stmts;
    try {
        stmts = parse_line(line);
    } catch (const ParseError& e) {
        const ParseError rebased(line_number, e.column(), e.expected(), e.found());
        out << "error: " << rebased.what() << '\n';
        return false;
    }
    for (const auto& s : stmts) {
        try {
            execute(s, out);
        } catch (const Error& e) {
            out << "error: " << line_number << ": " << e.what() << '\n';
            return false;
        } catch (const std::exception& e) {
            out << "error: " << line_number << ": " << e.what() << '\n';
            return false;
        }
    }
    return true;
}

bool Session::run_stream(std::istream& in, std::ostream& out, const char* prompt)
{
    bool ok = true;
    std::string line;
    std::size_t n = 0;
    while (true) {
        if (prompt) out << prompt << std::flush;
        if (!std::getline(in, line)) break;
        ok = run_line(line, ++n, out) && ok;
        out << std::flush;
    }
    if (prompt) out << '\n';
    return ok;
}

} // namespace hfkit

#pragma once

#include "hfkit/error.hpp"
#include "hfkit/expr.hpp"
#include "hfkit/mewo.hpp"
#include "hfkit/ordinal.hpp"
#include "hfkit/universe.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>

namespace hfkit {

enum class OutputFormat { Text, Json, Dot };

OutputFormat parse_output_format(const std::string& name);

/// Result of evaluating an expression. Strings carry already rendered
/// output of `dot` and `json`.
using Value = std::variant<SetHandle, FinOrd, Mewo, bool, std::size_t, std::string>;

/// Raised for ill-typed command applications and unbound names.
class EvalError : public Error {
public:
    using Error::Error;
};

/// Bindings plus the universe they live in. Names are bound once.
class Session {
public:
    explicit Session(OutputFormat format = OutputFormat::Text);

    SetUniverse& universe() noexcept { return universe_; }
    OutputFormat format() const noexcept { return format_; }

    Value eval(const Expr& e);
    void execute(const Stmt& s, std::ostream& out);

    /// Runs one input line; errors are reported on `out` and make the
    /// return value false. `line_number` rebases parse error positions.
    bool run_line(const std::string& line, std::size_t line_number, std::ostream& out);

    /// Runs every line of `in`. A non-null prompt is written to `out`
    /// before each line. Returns false if any line failed.
    bool run_stream(std::istream& in, std::ostream& out, const char* prompt = nullptr);

    std::string render(const Value& v) const;

    const std::map<std::string, Value>& bindings() const noexcept { return bindings_; }

private:
    SetHandle as_set(const Value& v, const std::string& cmd) const;

    OutputFormat format_;
    SetUniverse universe_;
    std::map<std::string, Value> bindings_;
};

std::string set_to_dot(const SetUniverse& u, SetHandle h);
std::string ord_to_dot(const FinOrd& a);

/// Type name used in error messages: "set", "ordinal", "mewo", ...
std::string type_name(const Value& v);

} // namespace hfkit

#include "hfkit/error.hpp"

#include <sstream>

namespace hfkit {

namespace {

std::string describe_cycle(const std::vector<std::size_t>& cycle)
{
    std::ostringstream os;
    os << "cycle through vertices";
    for (auto v : cycle) os << ' ' << v;
    if (!cycle.empty()) os << ' ' << cycle.front();
    return os.str();
}

} // namespace

CyclicError::CyclicError(std::vector<std::size_t> cycle)
    : Error(describe_cycle(cycle)), cycle_(std::move(cycle))
{
}

const char* to_string(Axiom a) noexcept
{
    switch (a) {
    case Axiom::Shape: return "shape";
    case Axiom::Wellfoundedness: return "wellfoundedness";
    case Axiom::Extensionality: return "extensionality";
    case Axiom::Transitivity: return "transitivity";
    }
    return "unknown";
}

ValidationError::ValidationError(Axiom axiom, std::vector<std::size_t> witness, const std::string& what)
    : Error(what), axiom_(axiom), witness_(std::move(witness))
{
}

} // namespace hfkit

namespace hfkit {

namespace {

std::string describe_parse(std::size_t line, std::size_t column, const std::vector<std::string>& expected,
                           const std::string& found)
{
    std::ostringstream os;
    os << line << ':' << column << ": expected ";
    if (expected.size() > 1) os << "one of ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
    os << " but found " << found;
    return os.str();
}

} // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& found)
    : Error(describe_parse(line, column, expected, found)), line_(line), column_(column),
      expected_(std::move(expected)), found_(found)
{
}

} // namespace hfkit

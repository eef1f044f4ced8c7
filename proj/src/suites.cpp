#include "hfkit/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace hfkit {

using checks::CheckResult;

namespace {

std::size_t cap(std::size_t v, std::size_t hi) { return std::min(v, hi); }

std::vector<CheckResult> sets_suite(const SuiteConfig& c)
{
    return {
        checks::cumulative_stages(cap(c.max_size + 1, 5)),
        checks::set_laws(c.seed, 200, c.max_depth),
        checks::collapse_vs_bisimulation_exhaustive(cap(c.max_size + 1, 5)),
        checks::collapse_vs_bisimulation_random(c.seed, 2000, 8),
    };
}

std::vector<CheckResult> ordinals_suite(const SuiteConfig& c)
{
    return {
        checks::iterated_segments(cap(c.max_size + 3, 7)),
        checks::segments_of_sums(cap(c.max_size, 4)),
        checks::segments_of_sups(cap(c.max_size, 4), 3),
        checks::simulation_characterizations(cap(c.max_size + 1, 5)),
        checks::ordinal_oracle_agreement(cap(c.max_size + 1, 5)),
        checks::ordinal_poset_laws(cap(c.max_size + 1, 5)),
        checks::ordinal_linearity(cap(c.max_size + 2, 6)),
        checks::ordinals_form_an_ordinal(cap(c.max_size + 2, 6)),
    };
}

std::vector<CheckResult> mewos_suite(const SuiteConfig& c)
{
    const std::size_t m = cap(c.max_size, 4);
    return {
        checks::mewo_oracle_agreement(m, c.seed),
        checks::mewo_simulation_laws(m),
        checks::segment_laws(m),
        checks::trivialized_marking_laws(m),
        checks::bounded_then_simulation(m),
        checks::pointwise_simulation(m),
        checks::cover_iff_principal(m, cap(m, 3)),
        checks::covered_mewos_extensional(m),
        checks::union_laws(cap(m, 3), 2, m),
        checks::mewo_codes(m),
    };
}

std::vector<CheckResult> correspondence_suite(const SuiteConfig& c)
{
    const std::size_t m = cap(c.max_size, 4);
    return {
        checks::ordinal_roundtrips(4, 12, cap(c.max_size + 4, 8)),
        checks::ordinal_transport(cap(c.max_size + 2, 6)),
        checks::rank_as_quotient(c.seed, 500, 6, c.max_depth),
        checks::set_mewo_roundtrips(c.seed, 4, 1000, c.max_depth, m, 500),
        checks::mewo_transport(m),
        checks::square_commutes(cap(c.max_size + 2, 6)),
        checks::psi_mewo_forms(c.seed, 4, 200, c.max_depth),
    };
}

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more)
{
    for (auto& r : more) out.push_back(std::move(r));
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"ordinals", "sets", "mewos", "correspondence", "counterexamples", "all"};
    return names;
}

bool is_suite(const std::string& name)
{
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg)
{
    if (name == "sets") return sets_suite(cfg);
    if (name == "ordinals") return ordinals_suite(cfg);
    if (name == "mewos") return mewos_suite(cfg);
    if (name == "correspondence") return correspondence_suite(cfg);
    if (name == "counterexamples") return {checks::counterexample_fixtures()};
    if (name == "all") {
        std::vector<CheckResult> out;
        append(out, sets_suite(cfg));
        append(out, ordinals_suite(cfg));
        append(out, mewos_suite(cfg));
        append(out, correspondence_suite(cfg));
        out.push_back(checks::counterexample_fixtures());
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string suite_report_json(const std::string& name, const SuiteConfig& cfg, const std::vector<CheckResult>& results)
{
    nlohmann::json doc;
    doc["suite"] = name;
    doc["seed"] = cfg.seed;
    doc["max_size"] = cfg.max_size;
    doc["max_depth"] = cfg.max_depth;
    std::size_t cases = 0;
    std::size_t failed = 0;
    nlohmann::json summary = nlohmann::json::array();
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& r : results) {
        cases += r.cases();
        failed += r.failed();
        summary.push_back({{"name", r.name()}, {"cases", r.cases()}, {"failed", r.failed()}});
        for (const auto& f : r.failures())
            failures.push_back(
                {{"name", r.name() + ": " + f.name}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    }
    doc["cases"] = cases;
    doc["failed"] = failed;
    doc["passed"] = failed == 0;
    doc["checks"] = std::move(summary);
    doc["failures"] = std::move(failures);
    return doc.dump(2);
}

} // namespace hfkit

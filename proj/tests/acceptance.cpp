// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "hfkit/checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace hfkit::checks;

namespace {

constexpr std::uint64_t seed = 20260118;

struct Criterion {
    const char* id;
    const char* title;
    std::function<std::vector<CheckResult>()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "ordinal roundtrips phi/psi", [] { return std::vector{ordinal_roundtrips(4, 12, 8)}; }},
        {"AC2", "(=,<,<=) transport to (=,in,sub) for ordinals up to size 6",
         [] { return std::vector{ordinal_transport(6)}; }},
        {"AC3", "rank quotient = psi = elements ordinal on 500 presentations",
         [] { return std::vector{rank_as_quotient(seed, 500, 6, 5)}; }},
        {"AC4", "set/mewo roundtrips", [] { return std::vector{set_mewo_roundtrips(seed, 4, 1000, 5, 4, 500)}; }},
        {"AC5", "counterexample fixtures", [] { return std::vector{counterexample_fixtures()}; }},
        {"AC6", "covered iff principal", [] { return std::vector{cover_iff_principal(4, 3)}; }},
        {"AC7", "agreement with brute-force oracles",
         [] {
             return std::vector{mewo_oracle_agreement(4, seed), ordinal_oracle_agreement(5),
                                collapse_vs_bisimulation_exhaustive(5),
                                collapse_vs_bisimulation_random(seed, 10000, 8)};
         }},
        {"AC8", "algebraic laws",
         [] {
             return std::vector{iterated_segments(7),     segments_of_sums(4),        segments_of_sups(4, 3),
                                segment_laws(4),          trivialized_marking_laws(4), bounded_then_simulation(4),
                                union_laws(3, 2, 4)};
         }},
        {"AC9", "collapse of a 10^5-vertex graph within 5 s",
         [] { return std::vector{collapse_smoke(seed, 100000, 1000, 5.0)}; }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto results = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = true;
        std::size_t cases = 0;
        std::size_t bad = 0;
        for (const auto& r : results) {
            ok = ok && r.passed();
            cases += r.cases();
            bad += r.failed();
        }
        std::printf("%s %s: %s (%zu cases, %zu failures, %.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.title, cases, bad,
                    secs);
        for (const auto& r : results) {
            if (!r.note().empty()) std::printf("    %s: %s\n", r.name().c_str(), r.note().c_str());
            for (const auto& f : r.failures())
                std::printf("    %s / %s\n      input: %s\n      expected: %s\n      got: %s\n", r.name().c_str(),
                            f.name.c_str(), f.input.c_str(), f.expected.c_str(), f.got.c_str());
        }
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

/// Property checks over enumerated and generated structures. Each check
/// runs a family of cases and keeps the first few failures as reproducers.
namespace hfkit::checks {

struct Failure {
    std::string name;
    std::string input;
    std::string expected;
    std::string got;
};

class CheckResult {
public:
    static constexpr std::size_t kept_failures = 20;

    explicit CheckResult(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    std::size_t cases() const noexcept { return cases_; }
    std::size_t failed() const noexcept { return failed_; }
    bool passed() const noexcept { return failed_ == 0; }
    const std::vector<Failure>& failures() const noexcept { return failures_; }

    /// Extra information such as timings, shown next to the verdict.
    const std::string& note() const noexcept { return note_; }
    void set_note(std::string note) { note_ = std::move(note); }

    /// Records one case; `describe` builds the Failure only when needed.
    template <typename Describe>
    void expect(bool ok, Describe&& describe)
    {
        ++cases_;
        if (ok) return;
        ++failed_;
        if (failures_.size() < kept_failures) failures_.push_back(describe());
    }

    void merge(const CheckResult& other);

private:
    std::string name_;
    std::size_t cases_ = 0;
    std::size_t failed_ = 0;
    std::vector<Failure> failures_;
    std::string note_;
};

// Sets and presentations.
CheckResult cumulative_stages(std::size_t level);
CheckResult set_laws(std::uint64_t seed, std::size_t random_count, std::size_t max_depth);
CheckResult collapse_vs_bisimulation_exhaustive(std::size_t max_vertices);
CheckResult collapse_vs_bisimulation_random(std::uint64_t seed, std::size_t count, std::size_t max_vertices);
CheckResult collapse_smoke(std::uint64_t seed, std::size_t vertices, std::size_t sample, double budget_seconds);

// Finite ordinals.
CheckResult iterated_segments(std::size_t max_size);
CheckResult segments_of_sums(std::size_t max_size);
CheckResult segments_of_sups(std::size_t max_size, std::size_t max_family);
CheckResult simulation_characterizations(std::size_t max_size);
CheckResult ordinal_oracle_agreement(std::size_t max_size);
CheckResult ordinal_poset_laws(std::size_t max_size);
CheckResult ordinal_linearity(std::size_t max_size);
CheckResult ordinals_form_an_ordinal(std::size_t max_size);

// Mewos.
CheckResult mewo_oracle_agreement(std::size_t max_size, std::uint64_t seed);
CheckResult mewo_simulation_laws(std::size_t max_size);
CheckResult segment_laws(std::size_t max_size);
CheckResult trivialized_marking_laws(std::size_t max_size);
CheckResult bounded_then_simulation(std::size_t max_size);
CheckResult pointwise_simulation(std::size_t max_size);
CheckResult cover_iff_principal(std::size_t covered_size, std::size_t target_size);
CheckResult covered_mewos_extensional(std::size_t max_size);
CheckResult counterexample_fixtures();
CheckResult union_laws(std::size_t member_size, std::size_t family_size, std::size_t target_size);
CheckResult mewo_codes(std::size_t max_size);

// Correspondences.
CheckResult ordinal_roundtrips(std::size_t level, std::size_t max_numeral, std::size_t max_ordinal);
CheckResult ordinal_transport(std::size_t max_size);
CheckResult rank_as_quotient(std::uint64_t seed, std::size_t count, std::size_t max_width, std::size_t max_depth);
CheckResult set_mewo_roundtrips(std::uint64_t seed, std::size_t level, std::size_t random_sets,
                                std::size_t max_depth, std::size_t mewo_size, std::size_t random_mewos);
CheckResult mewo_transport(std::size_t max_size);
CheckResult square_commutes(std::size_t max_size);
CheckResult psi_mewo_forms(std::uint64_t seed, std::size_t level, std::size_t random_sets, std::size_t max_depth);

} // namespace hfkit::checks

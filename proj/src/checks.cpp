#include "hfkit/checks.hpp"

#include "hfkit/correspondence.hpp"
#include "hfkit/error.hpp"
#include "hfkit/mewo.hpp"
#include "hfkit/oracle.hpp"
#include "hfkit/ordinal.hpp"
#include "hfkit/pointed_graph.hpp"
#include "hfkit/universe.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hfkit::checks {

void CheckResult::merge(const CheckResult& other)
{
    cases_ += other.cases_;
    failed_ += other.failed_;
    for (const auto& f : other.failures_)
        if (failures_.size() < kept_failures) failures_.push_back(f);
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::vector<FinOrd> labelled_up_to(std::size_t n)
{
    std::vector<FinOrd> out;
    for (std::size_t k = 0; k <= n; ++k) {
        auto batch = oracle::enumerate_ordinals(k);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::string show_map(const std::vector<std::size_t>& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ']';
    return os.str();
}

template <typename T>
std::string show_opt_map(const std::optional<T>& w)
{
    return w ? show_map(w->map) : std::string("none");
}

std::string pair_text(const FinOrd& a, const FinOrd& b) { return to_text(a) + " ; " + to_text(b); }
std::string pair_text(const Mewo& a, const Mewo& b) { return to_text(a) + " ; " + to_text(b); }

std::string graph_text(const PointedGraph& g)
{
    std::ostringstream os;
    os << "root " << g.root << ":";
    for (std::size_t v = 0; v < g.successors.size(); ++v) {
        os << ' ' << v << "->" << show_map(g.successors[v]);
    }
    return os.str();
}

std::vector<std::size_t> all_marked(const Mewo& m)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.marked(i)) out.push_back(i);
    return out;
}

// Literal `∀ y ∈ x, ∀ z ∈ y, z ∈ x`.
bool transitive_by_definition(const SetUniverse& u, SetHandle x)
{
    for (auto y : u.elements(x))
        for (auto z : u.elements(y))
            if (!u.mem(z, x)) return false;
    return true;
}

bool st_ordinal_by_definition(const SetUniverse& u, SetHandle x)
{
    if (!transitive_by_definition(u, x)) return false;
    for (auto y : u.elements(x))
        if (!st_ordinal_by_definition(u, y)) return false;
    return true;
}

std::size_t rank_by_definition(const SetUniverse& u, SetHandle x)
{
    std::size_t r = 0;
    for (auto y : u.elements(x)) r = std::max(r, rank_by_definition(u, y) + 1);
    return r;
}

} // namespace

// ---------------------------------------------------------------- sets

CheckResult cumulative_stages(std::size_t level)
{
    CheckResult r("cumulative-stages");
    static const std::size_t sizes[] = {0, 1, 2, 4, 16, 65536};
    SetUniverse u;
    for (std::size_t k = 0; k <= std::min<std::size_t>(level, 5); ++k) {
        auto v = oracle::enumerate_v(k, u);
        r.expect(v.size() == sizes[k], [&] {
            return Failure{"stage size", "V" + std::to_string(k), std::to_string(sizes[k]),
                           std::to_string(v.size())};
        });
        for (auto h : v)
            r.expect(u.rank_nat(h) < k, [&] {
                return Failure{"rank below stage", format_set(u, h), "< " + std::to_string(k),
                               std::to_string(u.rank_nat(h))};
            });
    }
    // Extensionality on the small stages: distinct handles differ by a member.
    const auto small = oracle::enumerate_v(std::min<std::size_t>(level, 4), u);
    for (auto x : small) {
        for (auto y : small) {
            if (x == y) continue;
            bool differ = false;
            for (auto z : small) differ = differ || (u.mem(z, x) != u.mem(z, y));
            r.expect(differ && !(u.subset(x, y) && u.subset(y, x)), [&] {
                return Failure{"extensionality", format_set(u, x) + " ; " + format_set(u, y),
                               "a distinguishing member", "none"};
            });
        }
    }
    std::size_t ordinals = 0;
    for (auto x : small) ordinals += u.is_st_ordinal(x) ? 1 : 0;
    const std::size_t expected_ordinals = std::min<std::size_t>(level, 4);
    r.expect(ordinals == expected_ordinals, [&] {
        return Failure{"numerals among stage", "V" + std::to_string(std::min<std::size_t>(level, 4)),
                       std::to_string(expected_ordinals), std::to_string(ordinals)};
    });
    r.expect(u.verify_invariants(), [] { return Failure{"universe invariants", "", "true", "false"}; });
    return r;
}

CheckResult set_laws(std::uint64_t seed, std::size_t random_count, std::size_t max_depth)
{
    CheckResult r("set-laws");
    SetUniverse u;
    auto pool = oracle::enumerate_v(4, u);
    auto extra = oracle::gen_random_sets({seed, 4, max_depth, random_count}, u);
    pool.insert(pool.end(), extra.begin(), extra.end());
    oracle::Rng rng(seed ^ 0x5e75);
    for (auto x : pool) {
        const auto xs = format_set(u, x);
        r.expect(u.is_transitive_set(x) == transitive_by_definition(u, x), [&] {
            return Failure{"transitive", xs, yes_no(transitive_by_definition(u, x)),
                           yes_no(u.is_transitive_set(x))};
        });
        r.expect(u.is_st_ordinal(x) == st_ordinal_by_definition(u, x), [&] {
            return Failure{"st-ordinal", xs, yes_no(st_ordinal_by_definition(u, x)), yes_no(u.is_st_ordinal(x))};
        });
        r.expect(u.rank_nat(x) == rank_by_definition(u, x), [&] {
            return Failure{"rank", xs, std::to_string(rank_by_definition(u, x)), std::to_string(u.rank_nat(x))};
        });
        for (auto y : u.elements(x)) {
            r.expect(!u.is_st_ordinal(x) || u.is_st_ordinal(y), [&] {
                return Failure{"hereditary", xs + " ; " + format_set(u, y), "member is st-ordinal", "not"};
            });
            r.expect(u.rank_nat(y) < u.rank_nat(x), [&] {
                return Failure{"rank decreases", xs + " ; " + format_set(u, y), "smaller", "not smaller"};
            });
        }
        // Children in any order and with duplicates intern to the same handle.
        auto kids = u.elements(x);
        if (!kids.empty()) kids.push_back(kids[rng.below(kids.size())]);
        const auto perm = rng.permutation(kids.size());
        std::vector<SetHandle> shuffled;
        for (auto p : perm) shuffled.push_back(kids[p]);
        const auto again = u.mk_set(shuffled);
        r.expect(again == x, [&] { return Failure{"mk_set normalizes", xs, xs, format_set(u, again)}; });

        const auto text = export_slice_json(u, x);
        SetUniverse fresh;
        const auto back = import_slice_json(fresh, text);
        r.expect(export_slice_json(fresh, back) == text && format_set(fresh, back) == xs, [&] {
            return Failure{"json round trip", text, text, export_slice_json(fresh, back)};
        });
    }
    r.expect(u.verify_invariants(), [] { return Failure{"universe invariants", "", "true", "false"}; });
    return r;
}

CheckResult collapse_vs_bisimulation_exhaustive(std::size_t max_vertices)
{
    CheckResult r("collapse-vs-bisimulation-exhaustive");
    SetUniverse u;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        for (const auto& g : oracle::enumerate_dags(n)) {
            const auto handles = collapse_all(g, u);
            const auto bisim = greatest_bisimulation(g);
            for (std::size_t a = 0; a < n; ++a) {
                const PointedGraph ga{g, a};
                r.expect(from_graph(ga, u) == handles[a], [&] {
                    return Failure{"from_graph matches collapse_all", graph_text(ga), format_set(u, handles[a]),
                                   format_set(u, from_graph(ga, u))};
                });
                const auto canon = PointedGraph::of_set(u, handles[a]);
                r.expect(bisimilar(ga, canon), [&] {
                    return Failure{"bisimilar to its collapse", graph_text(ga), "true", "false"};
                });
                for (std::size_t b = 0; b < n; ++b) {
                    const bool same = handles[a] == handles[b];
                    r.expect(same == bisim(a, b), [&] {
                        return Failure{"collapse equality vs bisimulation",
                                       graph_text(ga) + " vs vertex " + std::to_string(b), yes_no(bisim(a, b)),
                                       yes_no(same)};
                    });
                    const PointedGraph gb{g, b};
                    r.expect(mem_raw(ga, gb) == u.mem(handles[a], handles[b]), [&] {
                        return Failure{"raw membership", graph_text(ga) + " vs vertex " + std::to_string(b),
                                       yes_no(u.mem(handles[a], handles[b])), yes_no(mem_raw(ga, gb))};
                    });
                }
            }
        }
    }
    return r;
}

CheckResult collapse_vs_bisimulation_random(std::uint64_t seed, std::size_t count, std::size_t max_vertices)
{
    CheckResult r("collapse-vs-bisimulation-random");
    SetUniverse u;
    oracle::Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
        const auto g1 = oracle::random_graph(rng, max_vertices);
        const auto g2 = rng.chance(1, 2) ? oracle::redundant_copy(rng, g1) : oracle::random_graph(rng, max_vertices);
        const bool by_collapse = from_graph(g1, u) == from_graph(g2, u);
        const bool by_bisim = bisimilar(g1, g2);
        r.expect(by_collapse == by_bisim, [&] {
            return Failure{"collapse equality vs bisimulation", graph_text(g1) + " ; " + graph_text(g2),
                           yes_no(by_bisim), yes_no(by_collapse)};
        });
    }
    return r;
}

CheckResult collapse_smoke(std::uint64_t seed, std::size_t vertices, std::size_t sample, double budget_seconds)
{
    CheckResult r("collapse-smoke");
    oracle::Rng rng(seed);
    const auto g = oracle::random_layered_dag(rng, vertices, 3);
    SetUniverse u;
    const auto start = std::chrono::steady_clock::now();
    const auto handles = collapse_all(g, u);
    const PointedGraph top{g, vertices - 1};
    const auto root = from_graph(top, u);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.expect(root == handles[vertices - 1], [&] {
        return Failure{"root collapse", "vertex " + std::to_string(vertices - 1), "collapse_all entry",
                       "different handle"};
    });
    r.expect(seconds <= budget_seconds, [&] {
        return Failure{"budget", std::to_string(vertices) + " vertices", "<= " + std::to_string(budget_seconds) + " s",
                       std::to_string(seconds) + " s"};
    });
    // The generator keeps edges inside prefixes, so the first `sample` vertices form a closed subgraph.
    const std::vector<std::vector<std::size_t>> prefix(g.begin(), g.begin() + std::min(sample, vertices));
    const auto bisim = greatest_bisimulation(prefix);
    for (std::size_t a = 0; a < prefix.size(); ++a)
        for (std::size_t b = 0; b < prefix.size(); ++b)
            r.expect((handles[a] == handles[b]) == bisim(a, b), [&] {
                return Failure{"sampled equality", std::to_string(a) + " vs " + std::to_string(b), yes_no(bisim(a, b)),
                               yes_no(handles[a] == handles[b])};
            });
    std::ostringstream note;
    note.precision(3);
    note << std::fixed << seconds << " s for " << vertices << " vertices, " << u.size() << " distinct sets";
    r.set_note(note.str());
    return r;
}

// ---------------------------------------------------------------- ordinals

CheckResult iterated_segments(std::size_t max_size)
{
    CheckResult r("iterated-segments");
    for (const auto& alpha : labelled_up_to(max_size)) {
        for (std::size_t a = 0; a < alpha.size(); ++a) {
            const auto seg = segment_elements(alpha, a);
            const auto da = down(alpha, a);
            for (std::size_t k = 0; k < seg.size(); ++k) {
                const auto lhs = down(da, k);
                const auto rhs = down(alpha, seg[k]);
                r.expect(lhs == rhs, [&] {
                    return Failure{"(a|x)|y = a|y",
                                   to_text(alpha) + " at " + std::to_string(a) + ", " + std::to_string(seg[k]),
                                   to_text(rhs), to_text(lhs)};
                });
            }
        }
    }
    return r;
}

CheckResult segments_of_sums(std::size_t max_size)
{
    CheckResult r("segments-of-sums");
    const auto all = labelled_up_to(max_size);
    for (const auto& alpha : all) {
        const auto with_top = sum(alpha, FinOrd::chain(1));
        r.expect(down(with_top, alpha.size()) == alpha, [&] {
            return Failure{"(a+1)|top = a", to_text(alpha), to_text(alpha), to_text(down(with_top, alpha.size()))};
        });
        for (const auto& beta : all) {
            const auto s = sum(alpha, beta);
            for (std::size_t a = 0; a < alpha.size(); ++a)
                r.expect(down(s, a) == down(alpha, a), [&] {
                    return Failure{"(a+b)|inl x = a|x", pair_text(alpha, beta) + " at " + std::to_string(a),
                                   to_text(down(alpha, a)), to_text(down(s, a))};
                });
            for (std::size_t b = 0; b < beta.size(); ++b) {
                const auto expected = sum(alpha, down(beta, b));
                r.expect(equivalent(down(s, alpha.size() + b), expected), [&] {
                    return Failure{"(a+b)|inr y = a+(b|y)", pair_text(alpha, beta) + " at " + std::to_string(b),
                                   to_text(expected), to_text(down(s, alpha.size() + b))};
                });
            }
            r.expect(order_type(s) == alpha.size() + beta.size(), [&] {
                return Failure{"order type of sum", pair_text(alpha, beta),
                               std::to_string(alpha.size() + beta.size()), std::to_string(order_type(s))};
            });
        }
    }
    return r;
}

namespace {

std::string family_text(std::span<const FinOrd> family)
{
    std::string s = "[";
    for (std::size_t i = 0; i < family.size(); ++i) s += (i ? " ; " : "") + to_text(family[i]);
    return s + "]";
}

void check_one_sup(CheckResult& r, std::span<const FinOrd> family, std::size_t max_target)
{
    const auto s = sup(family);
    const auto reps = sup_representatives(family);
    std::size_t longest = 0;
    for (const auto& f : family) longest = std::max(longest, f.size());
    r.expect(reps.size() == s.size() && equivalent(s, FinOrd::chain(longest)), [&] {
        return Failure{"sup is the longest member", family_text(family), to_text(FinOrd::chain(longest)), to_text(s)};
    });
    // Every point of the sup has the segment of its representative.
    for (std::size_t c = 0; c < reps.size() && c < s.size(); ++c) {
        const auto [i, y] = reps[c];
        r.expect(equivalent(down(s, c), down(family[i], y)), [&] {
            return Failure{"sup|[i,y] = F_i|y", family_text(family) + " at class " + std::to_string(c),
                           to_text(down(family[i], y)), to_text(down(s, c))};
        });
    }
    // Each member maps into the sup by a simulation landing on equal segments.
    for (std::size_t j = 0; j < family.size(); ++j) {
        std::vector<std::size_t> into(family[j].size(), s.size());
        for (std::size_t x = 0; x < family[j].size(); ++x)
            for (std::size_t c = 0; c < s.size(); ++c)
                if (equivalent(down(s, c), down(family[j], x))) into[x] = c;
        r.expect(is_simulation(family[j], s, into), [&] {
            return Failure{"F_j <= sup", family_text(family) + " member " + std::to_string(j), "simulation",
                           show_map(into)};
        });
    }
    // Least among upper bounds; chains cover every ordinal up to equivalence.
    for (std::size_t t = 0; t <= max_target; ++t) {
        const auto target = FinOrd::chain(t);
        bool bound = true;
        for (const auto& f : family) bound = bound && simulation(f, target).has_value();
        if (!bound) continue;
        r.expect(simulation(s, target).has_value(), [&] {
            return Failure{"sup below every upper bound", family_text(family) + " ; " + to_text(target), "simulation",
                           "none"};
        });
    }
}

} // namespace

CheckResult segments_of_sups(std::size_t max_size, std::size_t max_family)
{
    CheckResult r("segments-of-sups");
    const auto all = labelled_up_to(max_size);
    std::vector<FinOrd> family;
    auto rec = [&](auto&& self) -> void {
        check_one_sup(r, family, max_size + 1);
        if (family.size() == max_family) return;
        for (const auto& f : all) {
            family.push_back(f);
            self(self);
            family.pop_back();
        }
    };
    rec(rec);
    return r;
}

CheckResult simulation_characterizations(std::size_t max_size)
{
    CheckResult r("simulation-characterizations");
    const auto all = labelled_up_to(max_size);
    for (const auto& alpha : all) {
        for (const auto& beta : all) {
            const auto sim = simulation(alpha, beta);
            bool bounded_each = true;
            bool segment_each = true;
            for (std::size_t a = 0; a < alpha.size(); ++a) {
                const auto da = down(alpha, a);
                bounded_each = bounded_each && bounded_sim(da, beta).has_value();
                bool found = false;
                for (std::size_t b = 0; b < beta.size() && !found; ++b) found = equivalent(da, down(beta, b));
                segment_each = segment_each && found;
            }
            r.expect(sim.has_value() == bounded_each && bounded_each == segment_each, [&] {
                return Failure{"three characterizations agree", pair_text(alpha, beta),
                               std::string("all ") + yes_no(sim.has_value()),
                               std::string(yes_no(sim.has_value())) + "/" + yes_no(bounded_each) + "/" +
                                   yes_no(segment_each)};
            });
            if (sim)
                r.expect(is_simulation(alpha, beta, sim->map), [&] {
                    return Failure{"witness is a simulation", pair_text(alpha, beta), "simulation", show_map(sim->map)};
                });
            const auto fast = simulation_by_order_type(alpha, beta);
            r.expect(fast == sim, [&] {
                return Failure{"order-type path", pair_text(alpha, beta), show_opt_map(sim), show_opt_map(fast)};
            });
        }
    }
    return r;
}

CheckResult ordinal_oracle_agreement(std::size_t max_size)
{
    CheckResult r("ordinal-oracle-agreement");
    const auto all = labelled_up_to(max_size);
    for (const auto& alpha : all) {
        for (const auto& beta : all) {
            const auto sims = oracle::enum_simulations(alpha, beta);
            const auto sim = simulation(alpha, beta);
            const bool sim_ok = sims.size() <= 1 && sim.has_value() == !sims.empty() && (!sim || sim->map == sims[0]);
            r.expect(sim_ok, [&] {
                return Failure{"simulation", pair_text(alpha, beta), sims.empty() ? "none" : show_map(sims[0]),
                               show_opt_map(sim) + " (" + std::to_string(sims.size()) + " enumerated)"};
            });
            const auto bsims = oracle::enum_bounded_sims(alpha, beta);
            const auto bsim = bounded_sim(alpha, beta);
            const bool bsim_ok = bsims.size() <= 1 && bsim.has_value() == !bsims.empty() &&
                                 (!bsim || (bsim->bound == bsims[0].first && bsim->iso == bsims[0].second));
            r.expect(bsim_ok, [&] {
                return Failure{"bounded simulation", pair_text(alpha, beta),
                               bsims.empty() ? "none" : std::to_string(bsims[0].first) + show_map(bsims[0].second),
                               bsim ? std::to_string(bsim->bound) + show_map(bsim->iso) : "none"};
            });
            bool iso = false;
            for (const auto& m : sims) {
                std::vector<std::size_t> sorted = m;
                std::sort(sorted.begin(), sorted.end());
                iso = iso || (m.size() == beta.size() &&
                              std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
            }
            r.expect(equivalent(alpha, beta) == iso, [&] {
                return Failure{"equality", pair_text(alpha, beta), yes_no(iso), yes_no(equivalent(alpha, beta))};
            });
        }
    }
    return r;
}

CheckResult ordinal_poset_laws(std::size_t max_size)
{
    CheckResult r("ordinal-poset-laws");
    const auto all = labelled_up_to(max_size);
    for (const auto& alpha : all) {
        r.expect(!bounded_sim(alpha, alpha), [&] {
            return Failure{"irreflexive <", to_text(alpha), "none", "bounded simulation"};
        });
        for (const auto& beta : all) {
            const auto f = simulation(alpha, beta);
            const auto g = simulation(beta, alpha);
            if (f && g) {
                bool inverse = true;
                for (std::size_t x = 0; x < alpha.size(); ++x) inverse = inverse && g->map[f->map[x]] == x;
                r.expect(inverse && is_isomorphism(alpha, beta, f->map) && equivalent(alpha, beta) &&
                             canonical_form(alpha) == canonical_form(beta),
                         [&] {
                             return Failure{"antisymmetry", pair_text(alpha, beta), "inverse isomorphisms",
                                            show_map(f->map) + " / " + show_map(g->map)};
                         });
            }
            if (bounded_sim(alpha, beta))
                r.expect(f.has_value(), [&] { return Failure{"< implies <=", pair_text(alpha, beta), "simulation", "none"}; });
            const int lt = bounded_sim(alpha, beta) ? 1 : 0;
            const int gt = bounded_sim(beta, alpha) ? 1 : 0;
            const int eq = equivalent(alpha, beta) ? 1 : 0;
            r.expect(lt + gt + eq == 1, [&] {
                return Failure{"trichotomy", pair_text(alpha, beta), "exactly one of <, =, >",
                               std::to_string(lt) + std::to_string(eq) + std::to_string(gt)};
            });
        }
    }
    const auto small = labelled_up_to(std::min<std::size_t>(max_size, 3));
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                if (simulation(a, b) && simulation(b, c))
                    r.expect(simulation(a, c).has_value(), [&] {
                        return Failure{"<= transitive", pair_text(a, b) + " ; " + to_text(c), "simulation", "none"};
                    });
                if (bounded_sim(a, b) && bounded_sim(b, c))
                    r.expect(bounded_sim(a, c).has_value(), [&] {
                        return Failure{"< transitive", pair_text(a, b) + " ; " + to_text(c), "bounded", "none"};
                    });
            }
    return r;
}

CheckResult ordinal_linearity(std::size_t max_size)
{
    CheckResult r("ordinal-linearity");
    for (const auto& alpha : labelled_up_to(max_size)) {
        for (std::size_t a = 0; a < alpha.size(); ++a)
            for (std::size_t b = 0; b < alpha.size(); ++b) {
                const int n = (a == b) + alpha.less(a, b) + alpha.less(b, a);
                r.expect(n == 1, [&] {
                    return Failure{"linear", to_text(alpha) + " at " + std::to_string(a) + "," + std::to_string(b),
                                   "exactly one", std::to_string(n)};
                });
            }
        const auto lin = alpha.linearization();
        for (std::size_t k = 0; k < lin.size(); ++k)
            r.expect(alpha.position(lin[k]) == k && order_type(down(alpha, lin[k])) == k, [&] {
                return Failure{"position", to_text(alpha), std::to_string(k), std::to_string(alpha.position(lin[k]))};
            });
    }
    return r;
}

CheckResult ordinals_form_an_ordinal(std::size_t max_size)
{
    CheckResult r("ordinals-form-an-ordinal");
    // One representative per equivalence class, listed in a scrambled order.
    std::vector<FinOrd> family;
    for (const auto& a : labelled_up_to(max_size)) {
        bool seen = false;
        for (const auto& f : family) seen = seen || equivalent(f, a);
        if (!seen) family.push_back(a);
    }
    std::reverse(family.begin(), family.end());
    Relation lt(family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) lt.set(i, j, bounded_sim(family[i], family[j]).has_value());
    try {
        const auto ord = FinOrd::validate(family.size(), lt);
        for (std::size_t i = 0; i < family.size(); ++i)
            r.expect(equivalent(down(ord, i), family[i]), [&] {
                return Failure{"Ord|a = a", to_text(family[i]), to_text(family[i]), to_text(down(ord, i))};
            });
    } catch (const std::exception& e) {
        r.expect(false, [&] {
            return Failure{"ordinals under < validate", "all ordinals up to size " + std::to_string(max_size),
                           "an ordinal", e.what()};
        });
    }
    return r;
}

// ---------------------------------------------------------------- mewos

CheckResult mewo_oracle_agreement(std::size_t max_size, std::uint64_t seed)
{
    CheckResult r("mewo-oracle-agreement");
    const auto all = oracle::enumerate_mewos_up_to(max_size);
    SetUniverse u;
    oracle::Rng rng(seed);
    for (const auto& x : all) {
        const auto copy = relabel(x, rng.permutation(x.size()));
        r.expect(mewo_equal(x, copy, u) && oracle::isomorphic(x, copy), [&] {
            return Failure{"relabelled copy is equal", pair_text(x, copy), "true", yes_no(mewo_equal(x, copy, u))};
        });
        for (const auto& y : all) {
            const auto sims = oracle::enum_simulations(x, y);
            const auto sim = simulation_mewo(x, y, u);
            r.expect(sims.size() <= 1 && sim.has_value() == !sims.empty() && (!sim || sim->map == sims[0]), [&] {
                return Failure{"simulation", pair_text(x, y), sims.empty() ? "none" : show_map(sims[0]),
                               show_opt_map(sim) + " (" + std::to_string(sims.size()) + " enumerated)"};
            });
            const auto bsims = oracle::enum_bounded_sims(x, y);
            const auto bsim = bounded_sim_mewo(x, y, u);
            r.expect(bsims.size() <= 1 && bsim.has_value() == !bsims.empty() &&
                         (!bsim || (bsim->bound == bsims[0].first && bsim->equivalence == bsims[0].second)),
                     [&] {
                         return Failure{"bounded simulation", pair_text(x, y),
                                        bsims.empty() ? "none"
                                                      : std::to_string(bsims[0].first) + show_map(bsims[0].second),
                                        bsim ? std::to_string(bsim->bound) + show_map(bsim->equivalence) : "none"};
                     });
            const bool iso = oracle::isomorphic(x, y);
            r.expect(mewo_equal(x, y, u) == iso, [&] {
                return Failure{"equality", pair_text(x, y), yes_no(iso), yes_no(!iso)};
            });
            bool brute_partial = true;
            for (auto a : all_marked(x)) {
                bool hit = false;
                for (auto b : all_marked(y)) hit = hit || oracle::isomorphic(down_plus(x, a), down_plus(y, b));
                brute_partial = brute_partial && hit;
            }
            const bool partial = partial_sim(x, y, u).has_value();
            r.expect(partial == brute_partial, [&] {
                return Failure{"partial simulation", pair_text(x, y), yes_no(brute_partial), yes_no(partial)};
            });
        }
    }
    return r;
}

CheckResult mewo_simulation_laws(std::size_t max_size)
{
    CheckResult r("mewo-simulation-laws");
    const auto all = oracle::enumerate_mewos_up_to(max_size);
    SetUniverse u;
    for (const auto& x : all) {
        for (const auto& y : all) {
            const auto f = simulation_mewo(x, y, u);
            const auto g = simulation_mewo(y, x, u);
            if (f && g)
                r.expect(mewo_equal(x, y, u), [&] {
                    return Failure{"antisymmetry", pair_text(x, y), "equal", "different"};
                });
            if (bounded_sim_mewo(x, y, u))
                r.expect(x.size() < y.size(), [&] {
                    return Failure{"< shrinks size", pair_text(x, y), "smaller", "not smaller"};
                });
        }
    }
    const auto small = oracle::enumerate_mewos_up_to(std::min<std::size_t>(max_size, 3));
    for (const auto& x : small)
        for (const auto& y : small) {
            const auto f = simulation_mewo(x, y, u);
            if (!f) continue;
            for (const auto& z : small) {
                const auto g = simulation_mewo(y, z, u);
                if (!g) continue;
                std::vector<std::size_t> composed;
                for (auto v : f->map) composed.push_back(g->map[v]);
                const auto direct = simulation_mewo(x, z, u);
                r.expect(is_mewo_simulation(x, z, composed) && direct && direct->map == composed, [&] {
                    return Failure{"composition", pair_text(x, y) + " ; " + to_text(z), show_map(composed),
                                   show_opt_map(direct)};
                });
            }
        }
    return r;
}

CheckResult segment_laws(std::size_t max_size)
{
    CheckResult r("segment-laws");
    SetUniverse u;
    for (const auto& x : oracle::enumerate_mewos_up_to(max_size)) {
        for (std::size_t a = 0; a < x.size(); ++a) {
            const auto seg = down_plus(x, a);
            r.expect(is_covered(seg), [&] {
                return Failure{"segments are covered", to_text(x) + " at " + std::to_string(a), "covered",
                               to_text(seg)};
            });
            for (std::size_t b = 0; b < x.size(); ++b) {
                if (a == b) continue;
                r.expect(!mewo_equal(seg, down_plus(x, b), u), [&] {
                    return Failure{"distinct points, distinct segments",
                                   to_text(x) + " at " + std::to_string(a) + "," + std::to_string(b), "different",
                                   "equal"};
                });
            }
        }
    }
    return r;
}

CheckResult trivialized_marking_laws(std::size_t max_size)
{
    CheckResult r("trivialized-marking-laws");
    const auto all = oracle::enumerate_mewos_up_to(max_size);
    SetUniverse u;
    for (const auto& x : all) {
        const auto top = mark_all(x);
        for (std::size_t a = 0; a < x.size(); ++a) {
            const auto inc = segment_plus_elements(x, a);
            r.expect(is_mewo_simulation(down_plus(x, a), top, inc), [&] {
                return Failure{"segment inclusion simulates", to_text(x) + " at " + std::to_string(a), "simulation",
                               show_map(inc)};
            });
        }
    }
    std::vector<std::vector<std::size_t>> below(all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (bounded_sim_mewo(all[i], all[j], u)) {
                below[j].push_back(i);
                r.expect(simulation_mewo(all[i], mark_all(all[j]), u).has_value(), [&] {
                    return Failure{"X < Y gives X <= Y*", pair_text(all[i], all[j]), "simulation", "none"};
                });
            }
    for (std::size_t j = 0; j < all.size(); ++j)
        for (std::size_t k = 0; k < all.size(); ++k) {
            if (!bounded_sim_mewo(all[j], all[k], u)) continue;
            const auto zs = mark_all(all[k]);
            for (auto i : below[j])
                r.expect(bounded_sim_mewo(all[i], zs, u).has_value(), [&] {
                    return Failure{"X < Y < Z gives X < Z*", pair_text(all[i], all[j]) + " ; " + to_text(all[k]),
                                   "bounded simulation", "none"};
                });
        }
    return r;
}

CheckResult bounded_then_simulation(std::size_t max_size)
{
    CheckResult r("bounded-then-simulation");
    const auto all = oracle::enumerate_mewos_up_to(max_size);
    SetUniverse u;
    for (const auto& y : all) {
        std::vector<const Mewo*> below, above;
        for (const auto& x : all)
            if (bounded_sim_mewo(x, y, u)) below.push_back(&x);
        for (const auto& z : all)
            if (simulation_mewo(y, z, u)) above.push_back(&z);
        for (auto x : below)
            for (auto z : above)
                r.expect(bounded_sim_mewo(*x, *z, u).has_value(), [&] {
                    return Failure{"X < Y <= Z gives X < Z", pair_text(*x, y) + " ; " + to_text(*z),
                                   "bounded simulation", "none"};
                });
    }
    return r;
}

CheckResult pointwise_simulation(std::size_t max_size)
{
    CheckResult r("pointwise-simulation");
    const auto all = oracle::enumerate_mewos_up_to(max_size);
    SetUniverse u;
    std::vector<MewoCode> code;
    for (const auto& m : all) code.push_back(codes(m, u));
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& x = all[i];
        for (std::size_t j = 0; j < all.size(); ++j) {
            const auto& y = all[j];
            if (x.size() > 0 && y.size() == 0) continue;
            std::vector<std::size_t> f(x.size(), 0);
            while (true) {
                bool keeps_marking = true;
                bool same_segments = true;
                for (std::size_t a = 0; a < x.size(); ++a) {
                    keeps_marking = keeps_marking && x.marked(a) == y.marked(f[a]);
                    same_segments = same_segments && code[i][a] == code[j][f[a]];
                }
                if (keeps_marking) {
                    const bool sim = is_mewo_simulation(x, y, f);
                    r.expect(sim == same_segments, [&] {
                        return Failure{"simulation iff segments match", pair_text(x, y) + " via " + show_map(f),
                                       yes_no(same_segments), yes_no(sim)};
                    });
                }
                std::size_t k = 0;
                while (k < f.size() && ++f[k] == y.size()) f[k++] = 0;
                if (k == f.size()) break;
            }
        }
    }
    return r;
}

CheckResult cover_iff_principal(std::size_t covered_size, std::size_t target_size)
{
    CheckResult r("cover-iff-principal");
    const auto targets = oracle::enumerate_mewos_up_to(target_size);
    for (const auto& x : oracle::enumerate_mewos_up_to(covered_size)) {
        if (is_covered(x)) {
            for (const auto& y : targets)
                r.expect(principality_check(x, y), [&] {
                    return Failure{"covered is principal", pair_text(x, y), "true", "false"};
                });
        } else {
            const auto part = covered_part(x);
            r.expect(!principality_check(x, part), [&] {
                return Failure{"uncovered fails against covered part", pair_text(x, part), "false", "true"};
            });
        }
    }
    return r;
}

CheckResult covered_mewos_extensional(std::size_t max_size)
{
    CheckResult r("covered-mewos-extensional");
    std::vector<Mewo> covered;
    for (const auto& m : oracle::enumerate_mewos_up_to(max_size))
        if (is_covered(m)) covered.push_back(m);
    SetUniverse u;
    const std::size_t n = covered.size();
    Relation lt(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lt.set(i, j, bounded_sim_mewo(covered[i], covered[j], u).has_value());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (mewo_equal(covered[i], covered[j], u)) continue;
            bool split = false;
            for (std::size_t k = 0; k < n && !split; ++k) split = lt(k, i) != lt(k, j);
            r.expect(split, [&] {
                return Failure{"distinct covered mewos differ below", pair_text(covered[i], covered[j]),
                               "a separating mewo", "none"};
            });
        }
    r.expect(!find_cycle(lt).has_value(), [&] {
        return Failure{"< is wellfounded on covered mewos", "all covered up to size " + std::to_string(max_size),
                       "acyclic", "cycle"};
    });
    return r;
}

CheckResult counterexample_fixtures()
{
    CheckResult r("counterexample-fixtures");
    const auto empty = Mewo::validate(0, Relation(0), {});
    const auto dot = Mewo::validate(1, Relation(1), {true});
    const auto hollow = Mewo::validate(1, Relation(1), {false});
    Relation two(2);
    two.set(0, 1, true);
    const auto chain = Mewo::validate(2, two, {false, true});
    auto want = [&](const char* name, const std::string& input, bool expected, bool got) {
        r.expect(expected == got, [&] { return Failure{name, input, yes_no(expected), yes_no(got)}; });
    };
    const auto b1 = bounded_sim_mewo(dot, chain);
    want("dot < hollow<-dot", pair_text(dot, chain), true, b1.has_value());
    if (b1) want("bound is the marked top", pair_text(dot, chain), true, b1->bound == 1);
    want("dot <= hollow<-dot", pair_text(dot, chain), false, simulation_mewo(dot, chain).has_value());
    want("empty < dot", pair_text(empty, dot), true, bounded_sim_mewo(empty, dot).has_value());
    want("empty < hollow<-dot", pair_text(empty, chain), false, bounded_sim_mewo(empty, chain).has_value());
    want("partial dot -> hollow<-dot", pair_text(dot, chain), false, partial_sim(dot, chain).has_value());
    want("hollow is not covered", to_text(hollow), false, is_covered(hollow));
    want("hollow<-dot is covered", to_text(chain), true, is_covered(chain));
    want("hollow not principal", pair_text(hollow, covered_part(hollow)), false,
         principality_check(hollow, covered_part(hollow)));
    want("segment of top is dot", to_text(chain), true, down_plus(chain, 1) == dot);
    want("singleton dot", to_text(dot), true, mewo_equal(singleton(dot), chain));
    bool threw = false;
    try {
        (void)singleton(hollow);
    } catch (const ValidationError& e) {
        threw = e.axiom() == Axiom::Extensionality;
    }
    want("singleton hollow rejected", to_text(hollow), true, threw);
    return r;
}

CheckResult union_laws(std::size_t member_size, std::size_t family_size, std::size_t target_size)
{
    CheckResult r("union-laws");
    const auto members = oracle::enumerate_mewos_up_to(member_size);
    const auto targets = oracle::enumerate_mewos_up_to(target_size);
    SetUniverse u;
    for (const auto& t : oracle::enumerate_mewos_up_to(target_size)) {
        if (!is_covered(t)) continue;
        r.expect(is_covered(singleton(t)), [&] {
            return Failure{"singleton stays covered", to_text(t), "covered", to_text(singleton(t))};
        });
    }
    std::vector<Mewo> family;
    auto check = [&] {
        std::string input = "[";
        for (std::size_t i = 0; i < family.size(); ++i) input += (i ? " ; " : "") + to_text(family[i]);
        input += "]";
        const auto un = mewo_union(family, u);
        bool all_covered = true;
        for (const auto& f : family) {
            all_covered = all_covered && is_covered(f);
            r.expect(simulation_mewo(f, un, u).has_value(), [&] {
                return Failure{"member below union", input, "simulation", "none"};
            });
        }
        if (all_covered)
            r.expect(is_covered(un), [&] { return Failure{"union of covered is covered", input, "covered", to_text(un)}; });
        for (const auto& y : targets) {
            bool bound = true;
            for (const auto& f : family) bound = bound && simulation_mewo(f, y, u).has_value();
            if (!bound) continue;
            r.expect(simulation_mewo(un, y, u).has_value(), [&] {
                return Failure{"union below every upper bound", input + " ; " + to_text(y), "simulation", "none"};
            });
        }
    };
    auto rec = [&](auto&& self) -> void {
        check();
        if (family.size() == family_size) return;
        for (const auto& m : members) {
            family.push_back(m);
            self(self);
            family.pop_back();
        }
    };
    rec(rec);
    return r;
}

CheckResult mewo_codes(std::size_t max_size)
{
    CheckResult r("mewo-codes");
    SetUniverse u;
    for (const auto& m : oracle::enumerate_mewos_up_to(max_size)) {
        try {
            const auto c = codes(m, u);
            for (std::size_t a = 0; a < m.size(); ++a) {
                std::vector<SetHandle> expected;
                for (std::size_t b = 0; b < m.size(); ++b)
                    if (m.less(b, a)) expected.push_back(c[b]);
                r.expect(u.mk_set(expected) == c[a], [&] {
                    return Failure{"code is set of predecessor codes", to_text(m) + " at " + std::to_string(a),
                                   format_set(u, u.mk_set(expected)), format_set(u, c[a])};
                });
            }
        } catch (const std::exception& e) {
            r.expect(false, [&] { return Failure{"codes injective", to_text(m), "codes", e.what()}; });
        }
    }
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto m = mark_all(from_ordinal(FinOrd::chain(n)));
        const auto c = codes(m, u);
        for (std::size_t a = 0; a < n; ++a)
            r.expect(c[a] == u.von_neumann(a), [&] {
                return Failure{"chain codes are numerals", to_text(m), std::to_string(a), format_set(u, c[a])};
            });
    }
    return r;
}

// ---------------------------------------------------------------- correspondences

CheckResult ordinal_roundtrips(std::size_t level, std::size_t max_numeral, std::size_t max_ordinal)
{
    CheckResult r("ordinal-roundtrips");
    SetUniverse u;
    std::vector<SetHandle> sets;
    for (auto h : oracle::enumerate_v(level, u))
        if (u.is_st_ordinal(h)) sets.push_back(h);
    for (std::size_t n = 0; n <= max_numeral; ++n) sets.push_back(u.von_neumann(n));
    for (auto h : sets) {
        const auto back = phi_ord(psi_ord(u, h), u);
        r.expect(back == h && u.is_st_ordinal(back), [&] {
            return Failure{"phi(psi h) = h", format_set(u, h), format_set(u, h), format_set(u, back)};
        });
    }
    std::unordered_map<SetHandle, FinOrd> cache;
    for (const auto& alpha : labelled_up_to(max_ordinal)) {
        const auto h = phi_ord(alpha, u);
        auto it = cache.find(h);
        if (it == cache.end()) it = cache.emplace(h, psi_ord(u, h)).first;
        r.expect(u.is_st_ordinal(h) && h == u.von_neumann(alpha.size()) && equivalent(it->second, alpha), [&] {
            return Failure{"psi(phi a) = a", to_text(alpha), to_text(alpha), to_text(it->second)};
        });
    }
    return r;
}

CheckResult ordinal_transport(std::size_t max_size)
{
    CheckResult r("ordinal-transport");
    const auto all = labelled_up_to(max_size);
    SetUniverse u;
    std::vector<SetHandle> image;
    for (const auto& a : all) image.push_back(phi_ord(a, u));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            const bool eq = equivalent(all[i], all[j]);
            const bool lt = bounded_sim(all[i], all[j]).has_value();
            const bool le = simulation(all[i], all[j]).has_value();
            const bool seq = image[i] == image[j];
            const bool in = u.mem(image[i], image[j]);
            const bool sub = u.subset(image[i], image[j]);
            r.expect(eq == seq && lt == in && le == sub, [&] {
                return Failure{"(=,<,<=) iff (=,in,sub)", pair_text(all[i], all[j]),
                               std::string(yes_no(eq)) + "," + yes_no(lt) + "," + yes_no(le),
                               std::string(yes_no(seq)) + "," + yes_no(in) + "," + yes_no(sub)};
            });
        }
    return r;
}

CheckResult rank_as_quotient(std::uint64_t seed, std::size_t count, std::size_t max_width, std::size_t max_depth)
{
    CheckResult r("rank-as-quotient");
    SetUniverse u;
    oracle::Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
        const auto [h, presentation] = oracle::random_presentation(rng, u, max_width, max_depth);
        std::string input = format_set(u, h) + " presented as [";
        for (std::size_t i = 0; i < presentation.size(); ++i)
            input += (i ? "," : "") + format_set(u, presentation[i]);
        input += "]";
        try {
            const auto q = rank_quotient(u, h, presentation);
            const auto psi = psi_ord(u, h);
            const auto elems = elements_ordinal(u, h);
            r.expect(canonical_form(q.order) == canonical_form(psi) && canonical_form(psi) == canonical_form(elems),
                     [&] {
                         return Failure{"quotient = psi = elements", input, to_text(canonical_form(psi)),
                                        to_text(q.order) + " / " + to_text(elems)};
                     });
            std::size_t covered = 0;
            for (const auto& c : q.classes) covered += c.size();
            r.expect(covered == presentation.size() && q.classes.size() == u.cardinality(h), [&] {
                return Failure{"classes partition the presentation", input, std::to_string(u.cardinality(h)),
                               std::to_string(q.classes.size())};
            });
        } catch (const std::exception& e) {
            r.expect(false, [&] { return Failure{"quotient = psi = elements", input, "an ordinal", e.what()}; });
        }
    }
    return r;
}

CheckResult set_mewo_roundtrips(std::uint64_t seed, std::size_t level, std::size_t random_sets, std::size_t max_depth,
                                std::size_t mewo_size, std::size_t random_mewos)
{
    CheckResult r("set-mewo-roundtrips");
    SetUniverse u;
    auto sets = oracle::enumerate_v(level, u);
    const auto extra = oracle::gen_random_sets({seed, 4, max_depth, random_sets}, u);
    sets.insert(sets.end(), extra.begin(), extra.end());
    for (auto h : sets) {
        const auto back = phi_mewo(psi_mewo(u, h), u);
        r.expect(back == h, [&] {
            return Failure{"phi(psi h) = h", format_set(u, h), format_set(u, h), format_set(u, back)};
        });
    }
    std::vector<Mewo> mewos;
    for (const auto& m : oracle::enumerate_mewos_up_to(mewo_size))
        if (is_covered(m)) mewos.push_back(m);
    const auto generated = oracle::gen_random_mewos({seed + 1, 4, 4, random_mewos}, true);
    mewos.insert(mewos.end(), generated.begin(), generated.end());
    for (const auto& m : mewos) {
        const auto back = psi_mewo(u, phi_mewo(m, u));
        r.expect(is_covered(m) && mewo_equal(back, m, u), [&] {
            return Failure{"psi(phi X) = X", to_text(m), to_text(m), to_text(back)};
        });
    }
    return r;
}

CheckResult mewo_transport(std::size_t max_size)
{
    CheckResult r("mewo-transport");
    std::vector<Mewo> covered;
    for (const auto& m : oracle::enumerate_mewos_up_to(max_size))
        if (is_covered(m)) covered.push_back(m);
    SetUniverse u;
    std::vector<SetHandle> image;
    for (const auto& m : covered) image.push_back(phi_mewo(m, u));
    for (std::size_t i = 0; i < covered.size(); ++i)
        for (std::size_t j = 0; j < covered.size(); ++j) {
            const bool le = simulation_mewo(covered[i], covered[j], u).has_value();
            const bool lt = bounded_sim_mewo(covered[i], covered[j], u).has_value();
            const bool sub = u.subset(image[i], image[j]);
            const bool in = u.mem(image[i], image[j]);
            r.expect(le == sub && lt == in, [&] {
                return Failure{"(<=,<) iff (sub,in)", pair_text(covered[i], covered[j]),
                               std::string(yes_no(sub)) + "," + yes_no(in), std::string(yes_no(le)) + "," + yes_no(lt)};
            });
        }
    return r;
}

CheckResult square_commutes(std::size_t max_size)
{
    CheckResult r("square-commutes");
    SetUniverse u;
    for (const auto& alpha : labelled_up_to(max_size)) {
        const auto h = phi_ord(alpha, u);
        const auto via_sets = psi_mewo(u, h);
        const auto direct = mark_all(from_ordinal(alpha));
        r.expect(mewo_equal(via_sets, direct, u) && phi_mewo(direct, u) == h, [&] {
            return Failure{"ordinal to mewo both ways", to_text(alpha), to_text(direct), to_text(via_sets)};
        });
    }
    return r;
}

CheckResult psi_mewo_forms(std::uint64_t seed, std::size_t level, std::size_t random_sets, std::size_t max_depth)
{
    CheckResult r("psi-mewo-forms");
    SetUniverse u;
    auto sets = oracle::enumerate_v(level, u);
    const auto extra = oracle::gen_random_sets({seed, 3, max_depth, random_sets}, u);
    sets.insert(sets.end(), extra.begin(), extra.end());
    for (auto h : sets) {
        const auto direct = psi_mewo(u, h);
        const auto literal = psi_mewo_literal(u, h);
        r.expect(is_covered(direct) && mewo_equal(direct, literal, u), [&] {
            return Failure{"union of singletons = direct", format_set(u, h), to_text(direct), to_text(literal)};
        });
    }
    return r;
}

} // namespace hfkit::checks

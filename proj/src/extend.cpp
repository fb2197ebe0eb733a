#include "ccseq/extend.hpp"

#include "ccseq/analysis.hpp"
#include "ccseq/error.hpp"
#include "ccseq/nesting.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace ccseq {

namespace {

constexpr long long kExhaustiveCandidateLimit = 1'000'000;

std::vector<BinarySequence> signed_block_copies(
    const std::vector<BinarySequence>& base, const BinarySequence& envelope) {
    std::vector<BinarySequence> out;
    out.reserve(base.size());
    for (const BinarySequence& seq : base) {
        std::vector<std::int8_t> chips;
        chips.reserve(envelope.size() * seq.size());
        for (std::size_t i = 0; i < envelope.size(); ++i) {
            const int sign = envelope[i];
            for (std::size_t t = 0; t < seq.size(); ++t) {
                chips.push_back(static_cast<std::int8_t>(sign * seq[t]));
            }
        }
        out.emplace_back(std::move(chips));
    }
    return out;
}

void check_extended_length(long long base_length, long long multiplier,
                           std::size_t cap) {
    if (multiplier > static_cast<long long>(cap) / base_length) {
        throw LengthCapExceeded(
            "extended length " + std::to_string(multiplier) + " * " +
            std::to_string(base_length) + " exceeds the cap of " +
            std::to_string(cap) + " chips");
    }
}

bool is_13_smooth(long long n, long long* first_large_prime = nullptr) {
    for (const long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
        while (n % p == 0) {
            n /= p;
        }
    }
    if (n == 1) {
        return true;
    }
    if (first_large_prime != nullptr) {
        // Smallest prime factor of the 13-rough remainder, for error text.
        long long p = 17;
        while (p * p <= n && n % p != 0) {
            p += 2;
        }
        *first_large_prime = (p * p <= n) ? p : n;
    }
    return false;
}

/// All multisets of admissible factor lengths with the given product,
/// ascending within each multiset.
void collect_factorizations(long long n, int min_factor,
                            std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
    if (n == 1) {
        out.push_back(current);
        return;
    }
    for (const int f : kBarkerLengths) {
        if (f >= min_factor && n % f == 0) {
            current.push_back(f);
            collect_factorizations(n / f, f, current, out);
            current.pop_back();
        }
    }
}

/// Max-min-factor multiset; ties go to fewer factors, then to the
/// lexicographically largest list (compared sorted descending).
std::vector<int> pick_factor_multiset(long long multiplier) {
    std::vector<std::vector<int>> candidates;
    std::vector<int> current;
    collect_factorizations(multiplier, 2, current, candidates);
    if (candidates.empty()) {
        long long prime = 0;
        is_13_smooth(multiplier, &prime);
        throw NotFeasible(prime, "multiplier " + std::to_string(multiplier) +
                                     " has prime factor " +
                                     std::to_string(prime) +
                                     " which exceeds 13");
    }
    auto better = [](const std::vector<int>& a, const std::vector<int>& b) {
        const int min_a = a.front(); // ascending, so front is the minimum
        const int min_b = b.front();
        if (min_a != min_b) {
            return min_a > min_b;
        }
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        std::vector<int> da(a.rbegin(), a.rend());
        std::vector<int> db(b.rbegin(), b.rend());
        return da > db;
    };
    std::vector<int> best = candidates.front();
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (better(candidates[i], best)) {
            best = candidates[i];
        }
    }
    return best;
}

Ratio envelope_smr(const BinarySequence& envelope) {
    if (envelope.size() == 1) {
        return Ratio(0);
    }
    // Both correlators are exact; the transform path keeps large
    // multipliers affordable.
    if (envelope.size() > 512) {
        return metrics(fast_xcorr(envelope, envelope)).smr;
    }
    return metrics(xcorr(envelope, envelope)).smr;
}

NestingPlan make_plan(long long multiplier, const std::vector<BarkerId>& ids) {
    std::vector<BarkerCode> codes;
    codes.reserve(ids.size());
    for (const BarkerId& id : ids) {
        codes.push_back(barker(id.length, id.variant));
    }
    BinarySequence envelope = nest_signs(codes);
    Ratio smr = envelope_smr(envelope);
    return NestingPlan{multiplier, ids, std::move(envelope), smr};
}

/// Walks every variant assignment for the given factor order, keeping the
/// first strictly best plan. `best` may arrive preloaded.
void search_variants(long long multiplier, const std::vector<int>& order,
                     std::vector<BarkerId>& ids, std::size_t pos,
                     std::optional<NestingPlan>& best) {
    if (pos == order.size()) {
        NestingPlan plan = make_plan(multiplier, ids);
        if (!best || plan.predicted_smr < best->predicted_smr) {
            best = std::move(plan);
        }
        return;
    }
    for (int v = 0; v < barker_variant_count(order[pos]); ++v) {
        ids.push_back(BarkerId{order[pos], v});
        search_variants(multiplier, order, ids, pos + 1, best);
        ids.pop_back();
    }
}

NestingPlan default_plan(long long multiplier, const std::vector<int>& multiset) {
    std::vector<int> order = multiset; // already ascending: shortest outermost
    std::optional<NestingPlan> best;
    std::vector<BarkerId> ids;
    search_variants(multiplier, order, ids, 0, best);
    return *best;
}

} // namespace

BinarySequence plan_envelope(const ExtensionPlan& plan) {
    if (const auto* cdos = std::get_if<CdosPlan>(&plan)) {
        std::vector<std::int8_t> env = {1};
        for (int q = 0; q < cdos->depth; ++q) {
            const std::size_t half = env.size();
            env.resize(2 * half);
            for (std::size_t i = 0; i < half; ++i) {
                env[half + i] = static_cast<std::int8_t>(-env[i]);
            }
        }
        return BinarySequence(std::move(env));
    }
    if (const auto* nested = std::get_if<NestingPlan>(&plan)) {
        return nested->envelope;
    }
    return std::get<EnvelopePlan>(plan).envelope;
}

long long plan_multiplier(const ExtensionPlan& plan) {
    if (const auto* cdos = std::get_if<CdosPlan>(&plan)) {
        return 1LL << cdos->depth;
    }
    if (const auto* nested = std::get_if<NestingPlan>(&plan)) {
        return nested->multiplier;
    }
    return static_cast<long long>(std::get<EnvelopePlan>(plan).envelope.size());
}

ExtendedSet cdos_extend(const ComplementarySet& base, int depth,
                        std::size_t cap) {
    if (depth < 0 || depth > 40) {
        throw Error("CDOS depth out of range: " + std::to_string(depth));
    }
    check_extended_length(base.length(), 1LL << depth, cap);

    CdosPlan plan{depth};
    return ExtendedSet{base.descriptor, base.set_index, plan,
                       signed_block_copies(base.sequences, plan_envelope(plan))};
}

ExtendedSet barker_extend(const ComplementarySet& base,
                          const BinarySequence& envelope, std::size_t cap) {
    check_extended_length(base.length(),
                          static_cast<long long>(envelope.size()), cap);
    return ExtendedSet{base.descriptor, base.set_index, EnvelopePlan{envelope},
                       signed_block_copies(base.sequences, envelope)};
}

ExtendedSet barker_extend(const ComplementarySet& base, const NestingPlan& plan,
                          std::size_t cap) {
    check_extended_length(base.length(), plan.multiplier, cap);
    return ExtendedSet{base.descriptor, base.set_index, plan,
                       signed_block_copies(base.sequences, plan.envelope)};
}

NestingPlan make_nesting_plan(const std::vector<BarkerId>& factors,
                              std::size_t cap) {
    if (factors.empty()) {
        return NestingPlan{1, {}, BinarySequence{+1}, Ratio(0)};
    }
    std::vector<BarkerCode> codes;
    codes.reserve(factors.size());
    long long multiplier = 1;
    for (const BarkerId& id : factors) {
        codes.push_back(barker(id.length, id.variant));
        multiplier *= id.length;
    }
    BinarySequence envelope = nest_signs(codes, cap);
    Ratio smr = envelope_smr(envelope);
    return NestingPlan{multiplier, factors, std::move(envelope), smr};
}

NestingPlan plan_length(long long multiplier, SearchMode mode) {
    if (multiplier < 1) {
        throw Error("multiplier must be >= 1, got " +
                    std::to_string(multiplier));
    }
    if (multiplier == 1) {
        return NestingPlan{1, {}, BinarySequence{+1}, Ratio(0)};
    }

    const std::vector<int> multiset = pick_factor_multiset(multiplier);
    if (mode == SearchMode::Exhaustive) {
        // Guard before evaluating any candidate. The bound is the plain
        // factorial of the factor count times the variant choices.
        long long candidates = 1;
        for (std::size_t i = 1; i <= multiset.size(); ++i) {
            candidates *= static_cast<long long>(i);
            if (candidates > kExhaustiveCandidateLimit) {
                break;
            }
        }
        for (const int f : multiset) {
            candidates *= barker_variant_count(f);
            if (candidates > kExhaustiveCandidateLimit) {
                break;
            }
        }
        if (candidates > kExhaustiveCandidateLimit) {
            throw ExhaustiveSearchTooLarge(
                "exhaustive search over " + std::to_string(multiset.size()) +
                " factors exceeds the candidate limit");
        }
    }

    NestingPlan best = default_plan(multiplier, multiset);
    if (mode == SearchMode::Default) {
        return best;
    }

    std::vector<int> order = multiset;
    std::optional<NestingPlan> winner = best;
    do {
        std::vector<BarkerId> ids;
        search_variants(multiplier, order, ids, 0, winner);
    } while (std::next_permutation(order.begin(), order.end()));
    return *winner;
}

long long min_multiplier(const Ratio& gain) {
    if (gain < Ratio(1)) {
        throw Error("gain must be >= 1");
    }
    long long n =
        (gain.numerator() + gain.denominator() - 1) / gain.denominator();
    while (!is_13_smooth(n)) {
        ++n;
    }
    return n;
}

long long count_feasible(long long lo, long long hi) {
    if (lo < 1 || lo > hi) {
        throw Error("need 1 <= lo <= hi");
    }
    long long count = 0;
    for (long long n = lo; n <= hi; ++n) {
        if (is_13_smooth(n)) {
            ++count;
        }
    }
    return count;
}

} // namespace ccseq

// Acceptance harness: eleven checks, one PASS/FAIL line each, exact
// integer/rational equalities throughout. Wall-clock limits are pinned
// next to the criteria they guard.

#include "ccseq/analysis.hpp"
#include "ccseq/barker.hpp"
#include "ccseq/ccc.hpp"
#include "ccseq/error.hpp"
#include "ccseq/extend.hpp"
#include "ccseq/io.hpp"
#include "ccseq/ratio.hpp"
#include "ccseq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ccseq;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& message) {
    if (!condition) {
        throw Failure(message);
    }
}

std::string str(long long v) { return std::to_string(v); }

/// Everything produced while checking criteria 1-10; criterion 11
/// round-trips each entry through both file formats.
struct Artifacts {
    std::vector<ComplementarySet> sets;
    std::vector<ExtendedSet> extended;
    std::vector<CorrelationProfile> profiles;
};

bool profile_is_impulse(const CorrelationProfile& profile, long long peak) {
    if (profile.mainlobe() != peak) {
        return false;
    }
    for (long long lag = profile.min_lag(); lag <= profile.max_lag(); ++lag) {
        if (lag != 0 && profile.at(lag) != 0) {
            return false;
        }
    }
    return true;
}

bool profile_is_zero(const CorrelationProfile& profile) {
    for (const long long v : profile.values()) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ criterion 1

void c1_sac_impulse(Artifacts& art) {
    for (const int m : {1, 2, 3}) {
        for (const int n : {0, 1, 2}) {
            const auto code = generate_ccc(m, n);
            const long long peak =
                static_cast<long long>(code.mate_count()) * code.length();
            for (const ComplementarySet& set : code.sets) {
                const CorrelationProfile profile = sac(set);
                expect(profile_is_impulse(profile, peak),
                       "sac not an impulse for m=" + str(m) + " n=" + str(n) +
                           " set=" + str(set.set_index));
                art.sets.push_back(set);
            }
            art.profiles.push_back(sac(code.sets[0]));
        }
    }
}

// ------------------------------------------------------------ criterion 2

void c2_scc_zero(Artifacts& art) {
    for (const int m : {1, 2, 3}) {
        for (const int n : {0, 1, 2}) {
            const auto code = generate_ccc(m, n);
            for (std::size_t i = 0; i < code.sets.size(); ++i) {
                for (std::size_t j = i + 1; j < code.sets.size(); ++j) {
                    const CorrelationProfile cross =
                        scc(code.sets[i], code.sets[j]);
                    expect(profile_is_zero(cross),
                           "scc not zero for m=" + str(m) + " n=" + str(n) +
                               " pair (" + str(static_cast<long long>(i)) +
                               "," + str(static_cast<long long>(j)) + ")");
                }
            }
            art.profiles.push_back(scc(code.sets[0], code.sets.back()));
        }
    }
}

// ------------------------------------------------------------ criterion 3

void c3_extension_nullity(Artifacts& art) {
    const auto code = generate_ccc(2, 1);
    std::mt19937 rng(70928);

    std::vector<long long> feasible;
    for (long long n = 2; n <= 20; ++n) {
        if (smoothness_oracle(n)) {
            feasible.push_back(n);
        }
    }
    std::uniform_int_distribution<std::size_t> pick_n(0, feasible.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_set(0,
                                                        code.sets.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);

    auto random_plan = [&]() {
        const long long n = feasible[pick_n(rng)];
        std::vector<BarkerId> ids = plan_length(n).factors;
        for (BarkerId& id : ids) {
            if (barker_variant_count(id.length) == 2) {
                id.variant = coin(rng);
            }
        }
        return make_nesting_plan(ids);
    };

    for (int draw = 0; draw < 100; ++draw) {
        std::size_t i = pick_set(rng);
        std::size_t j = pick_set(rng);
        if (i == j) {
            j = (j + 1) % code.sets.size();
        }
        const ExtendedSet a = barker_extend(code.sets[i], random_plan());
        const ExtendedSet b = barker_extend(code.sets[j], random_plan());
        expect(profile_is_zero(scc(a, b)),
               "extended mates correlated on draw " + str(draw));
        if (draw < 10) {
            art.extended.push_back(a);
            art.extended.push_back(b);
        }
    }

    // Same mate under different envelopes must yield a nonzero witness.
    const auto small = generate_ccc(1, 1);
    const ExtendedSet s1 =
        barker_extend(small.sets[0], BinarySequence::parse("++"));
    const ExtendedSet s2 =
        barker_extend(small.sets[0], BinarySequence::parse("+-"));
    const VerifyResult same = are_uncorrelated(s1, s2);
    expect(!same.ok, "same-mate pair reported uncorrelated");
    expect(same.witness.has_value(), "missing witness for same-mate pair");
    expect(same.witness->lag == -2 && same.witness->value == -4,
           "unexpected same-mate witness");
    expect(scc(s1, s2).at(2) == 4, "same-mate scc value at lag 2");
    art.extended.push_back(s1);
    art.extended.push_back(s2);
}

// ------------------------------------------------------------ criterion 4

void c4_cdos_bound(Artifacts& art) {
    const auto code = generate_ccc(1, 1);
    for (int q = 1; q <= 6; ++q) {
        const ExtendedSet ext = cdos_extend(code.sets[0], q);
        const Ratio smr = metrics(sac(ext)).smr;
        expect(smr == Ratio(1, 2),
               "cdos smr at depth " + str(q) + " is " + format_ratio(smr));
        art.extended.push_back(ext);
    }
    art.profiles.push_back(sac(cdos_extend(code.sets[0], 2)));
}

// ------------------------------------------------------------ criterion 5

void c5_barker_smr(Artifacts& art) {
    const auto code = generate_ccc(1, 1);
    const ComplementarySet& base = code.sets[0];

    const std::vector<std::pair<long long, Ratio>> landmarks = {
        {13, Ratio(1, 13)},
        {169, Ratio(1, 13)},
        {7, Ratio(1, 7)},
        {11, Ratio(1, 11)},
        {20, Ratio(1, 4)},
    };
    for (const auto& [n, want] : landmarks) {
        const NestingPlan plan = plan_length(n);
        expect(plan.predicted_smr == want,
               "plan smr for multiplier " + str(n) + " is " +
                   format_ratio(plan.predicted_smr) + ", wanted " +
                   format_ratio(want));
        const ExtendedSet ext = barker_extend(base, plan);
        const Ratio measured = metrics(sac(ext)).smr;
        expect(measured == want, "measured smr for multiplier " + str(n) +
                                     " is " + format_ratio(measured));
        art.extended.push_back(ext);
        art.profiles.push_back(sac(ext));
    }
}

// ------------------------------------------------------------ criterion 6

void c6_planner_bound(Artifacts&) {
    // Multiples of 4 whose chosen factor multiset avoids length 2; these
    // dip strictly below one half.
    const std::vector<long long> no_two = {4,  12, 16, 20, 28,  36,  44, 48,
                                           52, 60, 64, 80, 84, 100, 108, 112};
    for (long long n = 2; n <= 128; ++n) {
        if (!smoothness_oracle(n)) {
            continue;
        }
        const NestingPlan plan = plan_length(n);
        expect(plan.predicted_smr <= Ratio(1, 2),
               "default smr above 1/2 at multiplier " + str(n));

        const bool has_two =
            std::any_of(plan.factors.begin(), plan.factors.end(),
                        [](const BarkerId& id) { return id.length == 2; });
        const bool listed = std::find(no_two.begin(), no_two.end(), n) !=
                            no_two.end();
        expect((n % 4 == 0 && !has_two) == listed,
               "factor-2 avoidance mismatch at multiplier " + str(n));
        if (listed) {
            expect(plan.predicted_smr < Ratio(1, 2),
                   "multiple of 4 without factor 2 not below 1/2 at " +
                       str(n));
        }
    }
}

// ------------------------------------------------------------ criterion 7

void c7_length_count(Artifacts&) {
    expect(count_feasible(1, 128) == 73, "feasible count in [1,128]");
    long long pow2 = 0;
    for (long long n = 2; n <= 128; n *= 2) {
        ++pow2;
    }
    expect(pow2 == 7, "power-of-two count in [2,128]");
}

// ------------------------------------------------------------ criterion 8

void c8_min_multiplier(Artifacts&) {
    expect(min_multiplier(Ratio(10)) == 10, "min multiplier for gain 10");
    expect(min_multiplier(Ratio(6)) == 6, "min multiplier for gain 6");
    // Savings against the next power of two, as exact percentages.
    expect(Ratio(100 * (16 - 10), 16) == Ratio(75, 2),
           "gain 10 saving is 37.5%");
    expect(Ratio(100 * (8 - 6), 8) == Ratio(25), "gain 6 saving is 25%");
}

// ------------------------------------------------------------ criterion 9

void c9_sidelobe_sums(Artifacts& art) {
    const auto code = generate_ccc(1, 1);
    const ComplementarySet& base = code.sets[0];

    const SidelobeMetrics cdos4 = metrics(sac(cdos_extend(base, 2)));
    expect(cdos4.signed_sum_ratio == Ratio(-1), "cdos signed sum at 4");
    expect(cdos4.abs_sum_ratio == Ratio(2), "cdos abs sum at 4");

    const SidelobeMetrics barker4 =
        metrics(sac(barker_extend(base, barker(4, 0).signs)));
    expect(barker4.signed_sum_ratio == Ratio(0), "barker signed sum at 4");
    expect(barker4.abs_sum_ratio == Ratio(1), "barker abs sum at 4");

    for (int q = 1; q <= 7; ++q) {
        const long long n = 1LL << q;
        const Ratio cdos_abs =
            metrics(sac(cdos_extend(base, q))).abs_sum_ratio;
        const ExtendedSet planned = barker_extend(base, plan_length(n));
        const Ratio barker_abs = metrics(sac(planned)).abs_sum_ratio;
        expect(barker_abs <= cdos_abs,
               "barker abs sum above cdos at multiplier " + str(n));
        art.extended.push_back(planned);
    }
}

// ----------------------------------------------------------- criterion 10

void c10_oracle_equivalence(Artifacts& art) {
    // Closed-form impulse-train prediction vs the built extension.
    for (const int m : {1, 2}) {
        for (const int n : {0, 1, 2}) {
            const auto code = generate_ccc(m, n);
            for (long long mult = 1; mult <= 32; ++mult) {
                if (!smoothness_oracle(mult)) {
                    continue;
                }
                const NestingPlan plan = plan_length(mult);
                for (const ComplementarySet& set : code.sets) {
                    const ExtendedSet ext = barker_extend(set, plan);
                    const CorrelationProfile direct = sac(ext);
                    const CorrelationProfile predicted = envelope_sac_oracle(
                        plan.envelope, m, code.length());
                    expect(direct == predicted,
                           "oracle mismatch at m=" + str(m) + " n=" + str(n) +
                               " mult=" + str(mult) + " set=" +
                               str(set.set_index));
                }
            }
        }
    }
    const auto sample = generate_ccc(2, 2);
    art.extended.push_back(barker_extend(sample.sets[3], plan_length(32)));
    art.profiles.push_back(sac(art.extended.back()));

    // Transform path against the direct path, 1000 randomized cases.
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> log_len(
        0.0, std::log(32768.0));
    std::uniform_int_distribution<int> sign(0, 1);
    auto random_sequence = [&]() {
        const int length =
            static_cast<int>(std::exp(log_len(rng))); // 1 .. 32768
        std::vector<std::int8_t> chips(
            static_cast<std::size_t>(std::max(1, length)));
        for (auto& c : chips) {
            c = sign(rng) ? std::int8_t{+1} : std::int8_t{-1};
        }
        return BinarySequence(std::move(chips));
    };
    auto direct_at = [](const BinarySequence& a, const BinarySequence& b,
                        long long k) {
        long long sum = 0;
        for (long long i = 0; i < static_cast<long long>(b.size()); ++i) {
            const long long ai = i + k;
            if (ai >= 0 && ai < static_cast<long long>(a.size())) {
                sum += a[static_cast<std::size_t>(ai)] *
                       b[static_cast<std::size_t>(i)];
            }
        }
        return sum;
    };

    for (int trial = 0; trial < 1000; ++trial) {
        const BinarySequence a = random_sequence();
        const BinarySequence b = random_sequence();
        const CorrelationProfile fast = fast_xcorr(a, b);
        const auto work = static_cast<long long>(a.size()) *
                          static_cast<long long>(b.size());
        if (work <= 1'000'000) {
            const CorrelationProfile slow = xcorr(a, b);
            expect(fast == slow, "fast/direct mismatch on trial " +
                                     str(trial) + " (full compare)");
        } else {
            std::uniform_int_distribution<long long> lag(fast.min_lag(),
                                                         fast.max_lag());
            std::vector<long long> lags = {0, fast.min_lag(), fast.max_lag()};
            for (int s = 0; s < 32; ++s) {
                lags.push_back(lag(rng));
            }
            for (const long long k : lags) {
                expect(fast.at(k) == direct_at(a, b, k),
                       "fast/direct mismatch on trial " + str(trial) +
                           " at lag " + str(k));
            }
        }
    }
}

// ----------------------------------------------------------- criterion 11

void c11_round_trips(Artifacts& art) {
    long long checked = 0;
    auto round_trip_doc = [&](const SetDocument& doc) {
        for (const SetFileFormat format :
             {SetFileFormat::Json, SetFileFormat::Text}) {
            std::ostringstream out;
            write_set(doc, out, format);
            std::istringstream in(out.str());
            const SetDocument back = read_set(in);
            expect(back.descriptor == doc.descriptor,
                   "descriptor changed in round-trip");
            expect(back.set_index == doc.set_index,
                   "set_index changed in round-trip");
            expect(back.sequences == doc.sequences,
                   "chips changed in round-trip");
            expect(back.extension.has_value() == doc.extension.has_value(),
                   "extension presence changed in round-trip");
            if (doc.extension) {
                expect(plan_envelope(*back.extension) ==
                           plan_envelope(*doc.extension),
                       "envelope changed in round-trip");
            }
            std::ostringstream again;
            write_set(back, again, format);
            expect(again.str() == out.str(),
                   "write-read-write not byte identical");
            ++checked;
        }
    };

    for (const ComplementarySet& set : art.sets) {
        round_trip_doc(to_document(set));
    }
    for (const ExtendedSet& ext : art.extended) {
        round_trip_doc(to_document(ext));
    }
    for (const CorrelationProfile& profile : art.profiles) {
        std::ostringstream out;
        write_profile_csv(profile, out);
        std::istringstream in(out.str());
        expect(read_profile_csv(in) == profile,
               "profile changed in CSV round-trip");
        ++checked;
    }
    expect(checked > 0, "no artifacts were registered");
}

struct Criterion {
    int id;
    const char* label;
    double limit_seconds; // 0 means no pinned limit
    std::function<void(Artifacts&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "per-set autocorrelation sum is a single impulse", 10.0,
         c1_sac_impulse},
        {2, "cross-correlation sum of distinct mates is zero", 10.0,
         c2_scc_zero},
        {3, "random extensions keep distinct mates uncorrelated", 0.0,
         c3_extension_nullity},
        {4, "doubling extension holds smr at one half", 0.0, c4_cdos_bound},
        {5, "landmark envelope smr values", 0.0, c5_barker_smr},
        {6, "default planner smr bound over feasible multipliers", 30.0,
         c6_planner_bound},
        {7, "feasible length count in [1,128]", 0.0, c7_length_count},
        {8, "minimal multiplier vs next power of two", 0.0, c8_min_multiplier},
        {9, "sidelobe sum comparison at power-of-two multipliers", 0.0,
         c9_sidelobe_sums},
        {10, "closed-form and transform paths match the direct engine", 60.0,
         c10_oracle_equivalence},
        {11, "every artifact survives serialization", 0.0, c11_round_trips},
    };

    Artifacts art;
    int passed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.run(art);
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (failure.empty() && c.limit_seconds > 0.0 &&
            seconds > c.limit_seconds) {
            std::ostringstream msg;
            msg << "exceeded " << c.limit_seconds << " s limit";
            failure = msg.str();
        }

        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "[" << (c.id < 10 ? " " : "") << c.id << "] "
             << (failure.empty() ? "PASS" : "FAIL") << "  " << c.label << " ("
             << seconds << " s";
        if (c.limit_seconds > 0.0) {
            line << ", limit " << c.limit_seconds << " s";
        }
        line << ")";
        if (!failure.empty()) {
            line << "\n      " << failure;
        }
        std::cout << line.str() << "\n";
        if (failure.empty()) {
            ++passed;
        }
    }

    std::cout << passed << "/" << criteria.size() << " criteria passed"
              << "\n";
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}

#pragma once

#include "ccseq/ccc.hpp"
#include "ccseq/config.hpp"
#include "ccseq/ratio.hpp"
#include "ccseq/sequence.hpp"

#include <variant>
#include <vector>

namespace ccseq {

/// (length, variant) identifier of a Barker factor.
struct BarkerId {
    int length = 0;
    int variant = 0;
    bool operator==(const BarkerId&) const = default;
};

/// A realization of a length multiplier n as nested Barker factors, outermost
/// first, together with the expanded sign envelope and its peak-sidelobe
/// ratio. multiplier 1 is the identity plan: no factors, envelope [+1].
struct NestingPlan {
    long long multiplier = 1;
    std::vector<BarkerId> factors;
    BinarySequence envelope{+1};
    Ratio predicted_smr{0};

    bool operator==(const NestingPlan&) const = default;
};

/// Iterative [+S -S] length doubling, applied depth times.
struct CdosPlan {
    int depth = 0;
    bool operator==(const CdosPlan&) const = default;
};

/// Extension by an explicit sign envelope with no factor pedigree.
struct EnvelopePlan {
    BinarySequence envelope{+1};
    bool operator==(const EnvelopePlan&) const = default;
};

using ExtensionPlan = std::variant<CdosPlan, NestingPlan, EnvelopePlan>;

/// Sign envelope realized by a plan. For CdosPlan this is the expanded
/// [+ -] doubling pattern of length 2^depth.
BinarySequence plan_envelope(const ExtensionPlan& plan);

long long plan_multiplier(const ExtensionPlan& plan);

/// A complementary set stretched to length multiplier*L: sequence j is the
/// concatenation of envelope[i] * (base sequence j) over envelope positions.
/// Extended sets are no longer complementary but stay uncorrelated with every
/// other mate of the base family.
struct ExtendedSet {
    ConstructionDescriptor base;
    int set_index = 0;
    ExtensionPlan plan;
    std::vector<BinarySequence> sequences;

    int mate_count() const { return base.mate_count(); }
    long long base_length() const { return base.length(); }
    long long length() const { return base.length() * plan_multiplier(plan); }
};

/// Applies S' <- [+S' -S'] depth times. depth 0 returns the base unchanged.
ExtendedSet cdos_extend(const ComplementarySet& base, int depth,
                        std::size_t cap = length_cap());

/// Polynomial product B(z^L) * S: block copies of the base signed by the
/// envelope. A unit envelope [+1] returns the base unchanged.
ExtendedSet barker_extend(const ComplementarySet& base,
                          const BinarySequence& envelope,
                          std::size_t cap = length_cap());

/// Same extension but keeps the plan's factor pedigree in the result.
ExtendedSet barker_extend(const ComplementarySet& base, const NestingPlan& plan,
                          std::size_t cap = length_cap());

enum class SearchMode {
    /// Factors ascending (shortest outermost), variant 0 fixed for lengths
    /// 3,5,7,11,13, both variants tried for lengths 2 and 4.
    Default,
    /// All factor orderings and variant assignments; minimizes predicted_smr.
    /// Ties resolve to the Default plan.
    Exhaustive,
};

/// Realizes an explicit factor list (outermost first) as a plan: expands the
/// envelope and computes its peak-sidelobe ratio. An empty list gives the
/// identity plan.
NestingPlan make_nesting_plan(const std::vector<BarkerId>& factors,
                              std::size_t cap = length_cap());

/// Plans a length multiplier: picks the admissible factor multiset that
/// maximizes the minimum factor (ties: fewer factors, then lexicographically
/// largest), then orders and assigns variants per the search mode.
/// Throws NotFeasible when a prime factor exceeds 13, and
/// ExhaustiveSearchTooLarge when exhaustive enumeration would exceed
/// 10^6 candidates.
NestingPlan plan_length(long long multiplier,
                        SearchMode mode = SearchMode::Default);

/// Smallest 13-smooth integer n >= gain.
long long min_multiplier(const Ratio& gain);

/// Number of 13-smooth integers in [lo, hi]; 1 counts as feasible.
long long count_feasible(long long lo, long long hi);

} // namespace ccseq

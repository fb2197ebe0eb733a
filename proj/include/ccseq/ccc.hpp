#pragma once

#include "ccseq/config.hpp"
#include "ccseq/sequence.hpp"

#include <string>
#include <vector>

namespace ccseq {

/// Parameters sufficient to regenerate a code family bit-exactly.
/// delay_order is a named scheme; "natural" assigns delay j*M^(n-1) to
/// diagonal entry j at stage n. Permuted schemes are an extension point.
struct ConstructionDescriptor {
    int m = 1;
    int n_stages = 0;
    std::string delay_order = "natural";

    int mate_count() const { return 1 << m; } // M = 2^m
    long long length() const;                 // L = M^n_stages

    bool operator==(const ConstructionDescriptor&) const = default;
};

/// One mate of a code family: M = 2^m sequences of length L = M^n_stages
/// whose autocorrelations sum to a single impulse of amplitude M*L.
struct ComplementarySet {
    ConstructionDescriptor descriptor;
    int set_index = 0;
    std::vector<BinarySequence> sequences;

    int mate_count() const { return descriptor.mate_count(); }
    long long length() const { return descriptor.length(); }
};

/// All M mutually uncorrelated mates sharing one (M, L).
struct CompleteComplementaryCode {
    ConstructionDescriptor descriptor;
    std::vector<ComplementarySet> sets;

    int mate_count() const { return descriptor.mate_count(); }
    long long length() const { return descriptor.length(); }
};

/// Builds the full family from the Hadamard/delay matrix product
///   G(z) = H * prod_{n=1..N} (D_n(z) * H)
/// with H the Sylvester Hadamard matrix of order M and D_n(z) the diagonal
/// delay matrix whose entry j delays by j*M^(n-1) positions. Row s of G,
/// expanded to coefficient sequences, is mate s. Deterministic: identical
/// inputs give bit-identical codes.
CompleteComplementaryCode generate_ccc(int m, int n_stages,
                                       std::size_t cap = length_cap());

/// Regenerates from a descriptor (round-trip companion of the above).
CompleteComplementaryCode regenerate(const ConstructionDescriptor& descriptor,
                                     std::size_t cap = length_cap());

} // namespace ccseq

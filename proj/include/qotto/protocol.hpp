// protocol.hpp — Swap protocols on the 4d-level composite system: disjoint
// transposition sets and general permutations, their validation, application,
// the d-Otto construction, exhaustive enumeration, and the text file format.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qotto/state.hpp"

namespace qotto {

// Unordered pair of distinct flat level indices. Canonical form keeps a < b.
struct Transposition {
    int a = 0;
    int b = 0;

    Transposition() = default;
    Transposition(int a_, int b_);

    bool operator==(const Transposition&) const = default;
};

// Oriented view of a transposition: `up` is the end with the larger total
// energy energy_h + energy_c; ties broken by larger energy_h, then by the
// smaller flat index. Orientation only affects reporting; heats are computed
// from state differences and do not depend on it.
struct OrientedSwap {
    int up = 0;
    int down = 0;
};

enum class ProtocolKind { TranspositionSet, Permutation };

// A work-stroke unitary restricted to the permutation class. Either a set of
// pairwise-disjoint transpositions (canonical: swaps sorted by smaller index)
// or a general permutation stored as an image array of length 4d.
struct SwapProtocol {
    int d = 1;
    ProtocolKind kind = ProtocolKind::TranspositionSet;
    std::vector<Transposition> swaps;  // TranspositionSet mode
    std::vector<int> image;            // Permutation mode, size 4d

    static SwapProtocol identity(int d);
    // Canonicalizes and checks disjointness / index range.
    static SwapProtocol transposition_set(int d, std::vector<Transposition> swaps);
    // Checks that image is a bijection on [0, 4d).
    static SwapProtocol permutation(int d, std::vector<int> image);

    int levels() const { return 4 * d; }
    bool is_identity() const;

    bool operator==(const SwapProtocol&) const = default;
};

// Total order used for deterministic tie-breaking in search results.
bool canonical_less(const SwapProtocol& lhs, const SwapProtocol& rhs);

OrientedSwap orient(const Transposition& t, const CompositeState& reference);

// A transposition is internal when both ends share the same catalyst index;
// such swaps never move mass between catalyst columns.
bool is_internal(const Transposition& t, int d);

struct ValidationReport {
    std::vector<std::string> violations;
    int internal_swaps = 0;
    int external_swaps = 0;

    bool ok() const { return violations.empty(); }
};

// Diagnostic check: index ranges, pairwise disjointness (transposition mode)
// or bijectivity (permutation mode), plus the internal/external census.
ValidationReport validate_protocol(const SwapProtocol& proto);

// Applies the permutation to the diagonal state: entries are moved, never
// combined, so total probability is conserved exactly.
CompositeState apply_protocol(const CompositeState& state, const SwapProtocol& proto);

// The d disjoint swaps that realize the d-Otto engine: ups |1 0 k> for every
// catalyst column k, downs |0 0 k-1> for k = 1..d-1 and |0 1 d-1> for k = 0.
// Each swap links adjacent catalyst columns and the last one closes the loop,
// so the cyclicity constraint forces one common probability flow through all
// of them. d = 1 degenerates to the plain Otto swap |10> <-> |01>.
SwapProtocol d_otto_protocol(int d);

enum class EnumerationMode { Transpositions, Permutations };

// Default caps: 16 levels (d = 4) for transposition sets, 8 levels (d = 2)
// for general permutations. Enumerating past a cap requires override = true.
bool enumeration_within_cap(int d, EnumerationMode mode);

// Partitioned streaming enumeration. Partition p of enumerate_partition_count
// partitions yields a deterministic sub-stream; concatenating the partitions
// in index order gives the full canonical enumeration with no duplicates and
// no identity protocol. Partitions can be consumed concurrently.
int enumerate_partition_count(int d, EnumerationMode mode);
void enumerate_partition(int d, EnumerationMode mode, int partition,
                         const std::function<void(const SwapProtocol&)>& visit);

// Full enumeration in canonical order (all partitions, in order).
void enumerate_protocols(int d, EnumerationMode mode,
                         const std::function<void(const SwapProtocol&)>& visit,
                         bool override_cap = false);

// ---------------------------- text file format ------------------------------
//
// Transposition sets: one swap per line as six whitespace-separated integers
//   i j k i' j' k'
// with i, j in {0,1} and k in [0, d). Lines starting with '#' are comments.
// General permutations: a single line "perm:" followed by 4d image indices.

std::string protocol_to_text(const SwapProtocol& proto);
SwapProtocol parse_protocol_text(const std::string& text, int d);
SwapProtocol load_protocol_file(const std::string& path, int d);

}  // namespace qotto

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plateau/errors.hpp"

namespace plateau {

// ---------------------------------------------------------------------------
// Stirling permutations
// ---------------------------------------------------------------------------

// A word on the multiset {1,1,2,2,...,n,n} in which every entry strictly
// between the two copies of i exceeds i.
struct StirlingPermutation {
    int order = 0;          // n
    std::vector<int> word;  // 2n entries

    friend bool operator==(const StirlingPermutation&, const StirlingPermutation&) = default;
};

// Throws ValidationError naming the violated condition.
void validate(const StirlingPermutation& sp);

// Indices i in [2n-1] with w[i-1] < w[i] == w[i+1], reading a virtual 0
// before the word. 1-based, ascending.
std::vector<int> ascent_plateau_set(const StirlingPermutation& sp);
int ascent_plateau_count(const StirlingPermutation& sp);

// Plain ascents/plateaus (no virtual 0): indices i in [2n-1] with
// w[i] < w[i+1] resp. w[i] == w[i+1]. Exposed for completeness; nothing
// downstream consumes them.
std::vector<int> ascent_set(const StirlingPermutation& sp);
std::vector<int> plateau_set(const StirlingPermutation& sp);

std::string to_string(const StirlingPermutation& sp);
StirlingPermutation parse_stirling(std::string_view text);

// ---------------------------------------------------------------------------
// Perfect matchings
// ---------------------------------------------------------------------------

// A perfect matching of [2n] in standard form: each block (smaller, larger),
// blocks sorted by smaller entry.
struct PerfectMatching {
    int order = 0;  // n; ground set is [2n]
    std::vector<std::pair<int, int>> blocks;

    friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};

void validate(const PerfectMatching& m);

// A block is a "square bracket" exactly when its larger entry is even.
inline bool block_is_square(const std::pair<int, int>& block) { return block.second % 2 == 0; }

struct BlockCounts {
    int oo = 0, oe = 0, eo = 0, ee = 0;
    int so = 0;  // blocks with odd smaller entry = oo + oe

    friend bool operator==(const BlockCounts&, const BlockCounts&) = default;
};

// Class counts by the parity pattern of (smaller, larger). For every valid
// matching oo == ee, hence so == oe + ee as well; both are asserted.
BlockCounts classify_blocks(const PerfectMatching& m);

std::string to_string(const PerfectMatching& m);
PerfectMatching parse_matching(std::string_view text);

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

struct Permutation {
    std::vector<int> one_line;  // one_line[i-1] = pi(i)

    int size() const { return static_cast<int>(one_line.size()); }
    int image(int i) const { return one_line[static_cast<std::size_t>(i) - 1]; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

void validate(const Permutation& p);

// Standard cycle decomposition: each cycle written smallest entry first,
// cycles sorted by their minima.
std::vector<std::vector<int>> standard_cycles(const Permutation& p);

struct CycleStats {
    int exc = 0, cyc = 0, cdes = 0;

    friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

// exc + cyc + cdes == n always.
CycleStats cycle_statistics(const Permutation& p);

// Standard cycle form, e.g. "(1,3,5,2,6)(4)".
std::string to_string(const Permutation& p);
std::string to_one_line_string(const Permutation& p);
Permutation parse_permutation_cycles(std::string_view text);
Permutation parse_permutation_one_line(std::string_view text);

// ---------------------------------------------------------------------------
// MY-sequences
// ---------------------------------------------------------------------------

// One entry: a positive integer, a negative integer, or the star symbol.
class MYEntry {
public:
    constexpr MYEntry() = default;  // star

    static constexpr MYEntry star() { return MYEntry{}; }
    static MYEntry of(int value);  // value != 0

    bool is_star() const { return value_ == 0; }
    int value() const;  // requires !is_star()

    // Canonical entry order: 1 < 2 < ... < -1 < -2 < ... < star.
    static bool canonical_less(MYEntry a, MYEntry b);

    friend bool operator==(MYEntry, MYEntry) = default;

private:
    int value_ = 0;
};

struct MYSequence {
    std::vector<MYEntry> entries;

    int size() const { return static_cast<int>(entries.size()); }

    friend bool operator==(const MYSequence&, const MYSequence&) = default;
};

// Entrywise lexicographic comparison under the canonical entry order.
bool my_canonical_less(const MYSequence& a, const MYSequence& b);

struct MYValidation {
    bool ok = true;
    int first_bad_index = 0;  // 1-based; 0 when ok
};

// Checks the prefix-feasibility condition entry by entry: the first entry
// must be star, and entry k must lie in P_{1+s_k} or N_{t_k} where
// s_k = neg+star-1 and t_k = pos over the length-(k-1) prefix.
MYValidation validate_my(std::span<const MYEntry> entries);

struct MYStats {
    int pos = 0, neg = 0, star = 0;

    friend bool operator==(const MYStats&, const MYStats&) = default;
};

MYStats my_statistics(const MYSequence& y);

std::string to_string(const MYSequence& y);
std::string to_string(MYEntry e);
MYSequence parse_my(std::string_view text);

// ---------------------------------------------------------------------------
// Inversion sequences
// ---------------------------------------------------------------------------

// e_1..e_n with 0 <= e_i <= (i-1)k.
struct InversionSequence {
    int k = 1;
    std::vector<long long> entries;

    int size() const { return static_cast<int>(entries.size()); }

    friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
};

void validate(const InversionSequence& e);

// #{i : e_i/((i-1)k+1) < e_{i+1}/(ik+1)}, compared by exact
// cross-multiplication.
int inversion_ascents(const InversionSequence& e);

std::string to_string(const InversionSequence& e);
InversionSequence parse_inversion_sequence(std::string_view text);

}  // namespace plateau

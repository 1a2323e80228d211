#pragma once

#include <vector>

#include "plateau/objects.hpp"

namespace plateau {

// ---------------------------------------------------------------------------
// BB: bracket-breaking between MY-sequences and perfect matchings.
// ---------------------------------------------------------------------------

// One growth step: consume one entry against a matching of [2r], producing a
// matching of [2r+2] in standard form. A positive entry breaks a square
// bracket (block with even larger entry), a negative entry breaks a
// parenthesis, star appends the block [2r+1, 2r+2]. Labels address the i-th
// block of the class, ranked by smaller entry. Assumes a valid matching;
// throws ValidationError when the label exceeds the class count.
PerfectMatching bb_apply_step(const PerfectMatching& m, MYEntry y);

PerfectMatching bb_forward(const MYSequence& y);
MYSequence bb_inverse(const PerfectMatching& m);

// ---------------------------------------------------------------------------
// LSP: labeled Stirling permutations.
// ---------------------------------------------------------------------------

// Labels of the 2r+1 insertion gaps of an order-r word; gap g sits after
// position g. The l-th ascent plateau i_l labels gaps i_l - 1 and i_l with
// 2l-1 and 2l; remaining gaps carry -1, -2, ..., -2t, star left to right.
struct GapLabeling {
    int order = 0;
    std::vector<MYEntry> labels;  // size 2*order + 1

    friend bool operator==(const GapLabeling&, const GapLabeling&) = default;
};

GapLabeling lsp_label(const StirlingPermutation& sp);

// Insert the pair (r+1)(r+1) into the gap whose label equals y.
StirlingPermutation lsp_apply_step(const StirlingPermutation& sp, MYEntry y);

StirlingPermutation lsp_forward(const MYSequence& y);
MYSequence lsp_inverse(const StirlingPermutation& sp);

// ---------------------------------------------------------------------------
// LP: labeled permutations.
// ---------------------------------------------------------------------------

// One insertion slot after each element of the written standard cycle form.
// Excedance elements i_1 < ... < i_p carry -1..-p; the other elements carry
// 1..n-p in written left-to-right order.
struct SlotLabeling {
    int n = 0;
    std::vector<int> label_after;  // label_after[c-1] = label of the slot after c

    friend bool operator==(const SlotLabeling&, const SlotLabeling&) = default;
};

SlotLabeling lp_label(const Permutation& p);

// Insert r+1 after the element addressed by y, or as the new cycle (r+1)
// when y is star.
Permutation lp_apply_step(const Permutation& p, MYEntry y);

Permutation lp_my_to_perm(const MYSequence& y);

// Full preimage of p under lp_my_to_perm, of size 2^(cdes+exc), in canonical
// MY order.
std::vector<MYSequence> lp_fiber(const Permutation& p);

}  // namespace plateau

#include "plateau/bijections.hpp"

#include <algorithm>
#include <cstdlib>

namespace plateau {

// ---------------------------------------------------------------------------
// BB
// ---------------------------------------------------------------------------

PerfectMatching bb_apply_step(const PerfectMatching& m, MYEntry y) {
    int grown = 2 * m.order;  // current ground set is [grown]
    PerfectMatching out = m;
    out.order = m.order + 1;
    if (y.is_star()) {
        out.blocks.emplace_back(grown + 1, grown + 2);
        return out;
    }
    int v = y.value();
    bool want_square = v > 0;
    int rank = (std::abs(v) + 1) / 2;
    int seen = 0;
    std::size_t target = out.blocks.size();
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        if (block_is_square(out.blocks[i]) == want_square && ++seen == rank) {
            target = i;
            break;
        }
    }
    if (target == out.blocks.size())
        throw ValidationError("label " + to_string(y) + " addresses a missing " +
                              (want_square ? std::string("square bracket") : std::string("parenthesis")));
    auto [a, b] = out.blocks[target];
    out.blocks.erase(out.blocks.begin() + static_cast<std::ptrdiff_t>(target));
    if (std::abs(v) % 2 == 1) {
        out.blocks.emplace_back(a, grown + 1);
        out.blocks.emplace_back(b, grown + 2);
    } else {
        out.blocks.emplace_back(a, grown + 2);
        out.blocks.emplace_back(b, grown + 1);
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

PerfectMatching bb_forward(const MYSequence& y) {
    MYValidation check = validate_my(y.entries);
    if (!check.ok)
        throw ValidationError("not a MY-sequence (entry " +
                              std::to_string(check.first_bad_index) + ")");
    if (y.size() < 1) throw ValidationError("MY-sequence must be nonempty");
    PerfectMatching m;
    m.order = 1;
    m.blocks = {{1, 2}};
    for (int k = 2; k <= y.size(); ++k)
        m = bb_apply_step(m, y.entries[static_cast<std::size_t>(k) - 1]);
    return m;
}

MYSequence bb_inverse(const PerfectMatching& m) {
    validate(m);
    int n = m.order;
    MYSequence y;
    y.entries.assign(static_cast<std::size_t>(n), MYEntry::star());
    PerfectMatching cur = m;
    for (int k = n; k >= 2; --k) {
        int grown = 2 * (k - 1);
        int u = 0, v = 0;  // partners of grown+1 and grown+2
        for (const auto& [a, b] : cur.blocks) {
            if (b == grown + 1) u = a;
            if (b == grown + 2) v = a;
            if (a == grown + 1) u = b;  // only possible as (grown+1, grown+2)
        }
        if (u == grown + 2 || v == grown + 1) {
            // the last two elements form their own block
            y.entries[static_cast<std::size_t>(k) - 1] = MYEntry::star();
            std::erase_if(cur.blocks,
                          [&](const auto& blk) { return blk.second > grown; });
            cur.order = k - 1;
            continue;
        }
        std::erase_if(cur.blocks, [&](const auto& blk) { return blk.second > grown; });
        std::pair<int, int> restored{std::min(u, v), std::max(u, v)};
        cur.blocks.push_back(restored);
        std::sort(cur.blocks.begin(), cur.blocks.end());
        cur.order = k - 1;
        bool square = block_is_square(restored);
        int rank = 0;
        for (const auto& blk : cur.blocks) {
            if (block_is_square(blk) != square) continue;
            ++rank;
            if (blk == restored) break;
        }
        int magnitude = u < v ? 2 * rank - 1 : 2 * rank;
        y.entries[static_cast<std::size_t>(k) - 1] = MYEntry::of(square ? magnitude : -magnitude);
    }
    MYValidation check = validate_my(y.entries);
    if (!check.ok)
        throw ValidationError("matching did not peel to a MY-sequence (entry " +
                              std::to_string(check.first_bad_index) + ")");
    return y;
}

// ---------------------------------------------------------------------------
// LSP
// ---------------------------------------------------------------------------

GapLabeling lsp_label(const StirlingPermutation& sp) {
    int r = sp.order;
    GapLabeling g;
    g.order = r;
    g.labels.assign(2 * static_cast<std::size_t>(r) + 1, MYEntry::star());
    std::vector<char> taken(g.labels.size(), 0);
    std::vector<int> aps = ascent_plateau_set(sp);
    for (std::size_t l = 0; l < aps.size(); ++l) {
        int i = aps[l];
        g.labels[static_cast<std::size_t>(i) - 1] = MYEntry::of(2 * static_cast<int>(l) + 1);
        g.labels[static_cast<std::size_t>(i)] = MYEntry::of(2 * static_cast<int>(l) + 2);
        taken[static_cast<std::size_t>(i) - 1] = taken[static_cast<std::size_t>(i)] = 1;
    }
    // remaining gaps carry -1, -2, ..., -2t and then star, left to right
    int remaining = static_cast<int>(g.labels.size()) - 2 * static_cast<int>(aps.size());
    int next_neg = 1;
    for (std::size_t gap = 0; gap < g.labels.size(); ++gap) {
        if (taken[gap]) continue;
        if (next_neg < remaining)
            g.labels[gap] = MYEntry::of(-next_neg++);
        else
            g.labels[gap] = MYEntry::star();
    }
    return g;
}

StirlingPermutation lsp_apply_step(const StirlingPermutation& sp, MYEntry y) {
    GapLabeling g = lsp_label(sp);
    auto it = std::find(g.labels.begin(), g.labels.end(), y);
    if (it == g.labels.end())
        throw ValidationError("no gap carries label " + to_string(y));
    auto gap = static_cast<std::ptrdiff_t>(it - g.labels.begin());
    StirlingPermutation out = sp;
    out.order = sp.order + 1;
    out.word.insert(out.word.begin() + gap, 2, sp.order + 1);
    return out;
}

StirlingPermutation lsp_forward(const MYSequence& y) {
    MYValidation check = validate_my(y.entries);
    if (!check.ok)
        throw ValidationError("not a MY-sequence (entry " +
                              std::to_string(check.first_bad_index) + ")");
    if (y.size() < 1) throw ValidationError("MY-sequence must be nonempty");
    StirlingPermutation sp;
    sp.order = 1;
    sp.word = {1, 1};
    for (int k = 2; k <= y.size(); ++k)
        sp = lsp_apply_step(sp, y.entries[static_cast<std::size_t>(k) - 1]);
    return sp;
}

MYSequence lsp_inverse(const StirlingPermutation& sp) {
    validate(sp);
    int n = sp.order;
    MYSequence y;
    y.entries.assign(static_cast<std::size_t>(n), MYEntry::star());
    StirlingPermutation cur = sp;
    for (int k = n; k >= 2; --k) {
        auto first = std::find(cur.word.begin(), cur.word.end(), k);
        auto gap = static_cast<std::ptrdiff_t>(first - cur.word.begin());
        cur.word.erase(first, first + 2);  // the two copies of the maximum are adjacent
        cur.order = k - 1;
        y.entries[static_cast<std::size_t>(k) - 1] =
            lsp_label(cur).labels[static_cast<std::size_t>(gap)];
    }
    MYValidation check = validate_my(y.entries);
    if (!check.ok)
        throw ValidationError("word did not peel to a MY-sequence (entry " +
                              std::to_string(check.first_bad_index) + ")");
    return y;
}

// ---------------------------------------------------------------------------
// LP
// ---------------------------------------------------------------------------

SlotLabeling lp_label(const Permutation& p) {
    int n = p.size();
    SlotLabeling s;
    s.n = n;
    s.label_after.assign(static_cast<std::size_t>(n), 0);
    int next_neg = 1;
    for (int i = 1; i <= n; ++i)
        if (p.image(i) > i) s.label_after[static_cast<std::size_t>(i) - 1] = -next_neg++;
    int next_pos = 1;
    for (const auto& cycle : standard_cycles(p))
        for (int c : cycle)
            if (s.label_after[static_cast<std::size_t>(c) - 1] == 0)
                s.label_after[static_cast<std::size_t>(c) - 1] = next_pos++;
    return s;
}

Permutation lp_apply_step(const Permutation& p, MYEntry y) {
    int grown = p.size() + 1;
    Permutation out = p;
    out.one_line.push_back(grown);
    if (y.is_star()) return out;  // new fixed point (grown)
    int v = y.value();
    int want = v > 0 ? (v + 1) / 2 : -((-v + 1) / 2);
    SlotLabeling s = lp_label(p);
    auto it = std::find(s.label_after.begin(), s.label_after.end(), want);
    if (it == s.label_after.end())
        throw ValidationError("no slot carries label " + std::to_string(want));
    int c = static_cast<int>(it - s.label_after.begin()) + 1;
    out.one_line[static_cast<std::size_t>(grown) - 1] = p.image(c);
    out.one_line[static_cast<std::size_t>(c) - 1] = grown;
    return out;
}

Permutation lp_my_to_perm(const MYSequence& y) {
    MYValidation check = validate_my(y.entries);
    if (!check.ok)
        throw ValidationError("not a MY-sequence (entry " +
                              std::to_string(check.first_bad_index) + ")");
    if (y.size() < 1) throw ValidationError("MY-sequence must be nonempty");
    Permutation p;
    p.one_line = {1};
    for (int k = 2; k <= y.size(); ++k)
        p = lp_apply_step(p, y.entries[static_cast<std::size_t>(k) - 1]);
    return p;
}

std::vector<MYSequence> lp_fiber(const Permutation& p) {
    validate(p);
    int n = p.size();
    // options[k-1] holds the admissible values of y_k, already in canonical
    // entry order, so the product below comes out sorted
    std::vector<std::vector<MYEntry>> options(static_cast<std::size_t>(n));
    options[0] = {MYEntry::star()};
    Permutation cur = p;
    for (int k = n; k >= 2; --k) {
        if (cur.image(k) == k) {
            options[static_cast<std::size_t>(k) - 1] = {MYEntry::star()};
            cur.one_line.pop_back();
            continue;
        }
        int c = 0;
        for (int i = 1; i <= k; ++i)
            if (cur.image(i) == k) c = i;
        int after = cur.image(k);
        cur.one_line[static_cast<std::size_t>(c) - 1] = after;
        cur.one_line.pop_back();
        int lbl = lp_label(cur).label_after[static_cast<std::size_t>(c) - 1];
        if (lbl > 0)
            options[static_cast<std::size_t>(k) - 1] = {MYEntry::of(2 * lbl - 1),
                                                        MYEntry::of(2 * lbl)};
        else
            options[static_cast<std::size_t>(k) - 1] = {MYEntry::of(2 * lbl + 1),
                                                        MYEntry::of(2 * lbl)};
    }
    std::vector<MYSequence> fiber;
    MYSequence work;
    work.entries.assign(static_cast<std::size_t>(n), MYEntry::star());
    auto expand = [&](auto&& self, int k) -> void {
        if (k > n) {
            fiber.push_back(work);
            return;
        }
        for (MYEntry e : options[static_cast<std::size_t>(k) - 1]) {
            work.entries[static_cast<std::size_t>(k) - 1] = e;
            self(self, k + 1);
        }
    };
    expand(expand, 1);
    return fiber;
}

}  // namespace plateau

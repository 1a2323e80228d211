#pragma once

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plateau/objects.hpp"

// Exhaustive streaming enumeration of the five families, each in its
// documented canonical order:
//   - Stirling permutations: insert the pair nn into the gaps of each
//     order-(n-1) word, gaps left to right, recursively.
//   - Matchings: choose the partner of the smallest free element, partners
//     in increasing order, recursively.
//   - Permutations: lexicographic one-line order.
//   - MY-sequences: lexicographic under the entry order 1 < 2 < ... < -1 <
//     -2 < ... < star.
//   - Inversion sequences: lexicographic.
// The visitor receives a const reference to a reused buffer; copy it if it
// must outlive the call. Streams are single-consumer; independent streams
// may run in parallel.

namespace plateau {

template <typename Fn>
void for_each_stirling(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    StirlingPermutation sp;
    sp.order = n;
    sp.word.reserve(2 * static_cast<std::size_t>(n));
    sp.word = {1, 1};
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            fn(static_cast<const StirlingPermutation&>(sp));
            return;
        }
        for (int g = 0; g <= 2 * (k - 1); ++g) {
            sp.word.insert(sp.word.begin() + g, 2, k);
            self(self, k + 1);
            sp.word.erase(sp.word.begin() + g, sp.word.begin() + g + 2);
        }
    };
    rec(rec, 2);
}

template <typename Fn>
void for_each_matching(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    PerfectMatching m;
    m.order = n;
    m.blocks.reserve(static_cast<std::size_t>(n));
    std::vector<char> used(2 * static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self, int lowest_free) -> void {
        int a = lowest_free;
        while (a <= 2 * n && used[static_cast<std::size_t>(a)]) ++a;
        if (a > 2 * n) {
            fn(static_cast<const PerfectMatching&>(m));
            return;
        }
        used[static_cast<std::size_t>(a)] = 1;
        for (int b = a + 1; b <= 2 * n; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = 1;
            m.blocks.emplace_back(a, b);
            self(self, a + 1);
            m.blocks.pop_back();
            used[static_cast<std::size_t>(b)] = 0;
        }
        used[static_cast<std::size_t>(a)] = 0;
    };
    rec(rec, 1);
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    Permutation p;
    p.one_line.resize(static_cast<std::size_t>(n));
    std::iota(p.one_line.begin(), p.one_line.end(), 1);
    do {
        fn(static_cast<const Permutation&>(p));
    } while (std::next_permutation(p.one_line.begin(), p.one_line.end()));
}

template <typename Fn>
void for_each_my(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    MYSequence y;
    y.entries.reserve(static_cast<std::size_t>(n));
    y.entries.push_back(MYEntry::star());
    int pos = 0, neg = 0, star = 1;
    auto rec = [&](auto&& self) -> void {
        if (y.size() == n) {
            fn(static_cast<const MYSequence&>(y));
            return;
        }
        int s = neg + star - 1;
        int t = pos;
        for (int v = 1; v <= 2 * (1 + s); ++v) {
            y.entries.push_back(MYEntry::of(v));
            ++pos;
            self(self);
            --pos;
            y.entries.pop_back();
        }
        for (int v = 1; v <= 2 * t; ++v) {
            y.entries.push_back(MYEntry::of(-v));
            ++neg;
            self(self);
            --neg;
            y.entries.pop_back();
        }
        y.entries.push_back(MYEntry::star());
        ++star;
        self(self);
        --star;
        y.entries.pop_back();
    };
    rec(rec);
}

template <typename Fn>
void for_each_inversion_sequence(int n, int k, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    InversionSequence e;
    e.k = k;
    e.entries.assign(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(static_cast<const InversionSequence&>(e));
        // lexicographic odometer, last position fastest
        int i = n - 1;
        while (i >= 0 && e.entries[static_cast<std::size_t>(i)] ==
                             static_cast<long long>(i) * k)
            e.entries[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++e.entries[static_cast<std::size_t>(i)];
    }
}

// Materialized variants for small n, mostly used by tests and the CLI.

inline std::vector<StirlingPermutation> all_stirling(int n) {
    std::vector<StirlingPermutation> out;
    for_each_stirling(n, [&](const StirlingPermutation& sp) { out.push_back(sp); });
    return out;
}

inline std::vector<PerfectMatching> all_matchings(int n) {
    std::vector<PerfectMatching> out;
    for_each_matching(n, [&](const PerfectMatching& m) { out.push_back(m); });
    return out;
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

inline std::vector<MYSequence> all_my(int n) {
    std::vector<MYSequence> out;
    for_each_my(n, [&](const MYSequence& y) { out.push_back(y); });
    return out;
}

inline std::vector<InversionSequence> all_inversion_sequences(int n, int k) {
    std::vector<InversionSequence> out;
    for_each_inversion_sequence(n, k, [&](const InversionSequence& e) { out.push_back(e); });
    return out;
}

}  // namespace plateau

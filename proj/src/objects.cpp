#include "plateau/objects.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "plateau/bigint.hpp"

namespace plateau {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void expect(char c, const char* what) {
        if (done() || text[pos] != c) throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }

    long long signed_int() {
        std::size_t start = pos;
        if (!done() && text[pos] == '-') ++pos;
        std::size_t digits = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer", start);
        std::string s(text.substr(start, pos - start));
        if (s.size() > 12) throw ParseError("integer out of range", start);
        return std::stoll(s);
    }
};

std::vector<long long> parse_csv_ints(std::string_view text) {
    Cursor c{text};
    std::vector<long long> out;
    while (true) {
        out.push_back(c.signed_int());
        if (c.done()) break;
        c.expect(',', "','");
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Stirling permutations
// ---------------------------------------------------------------------------

void validate(const StirlingPermutation& sp) {
    int n = sp.order;
    if (n < 1) throw ValidationError("order must be at least 1");
    if (static_cast<int>(sp.word.size()) != 2 * n)
        throw ValidationError("word length must be 2n");
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (int v : sp.word) {
        if (v < 1 || v > n)
            throw ValidationError("word is not a permutation of the multiset {1,1,...,n,n}");
        ++count[static_cast<std::size_t>(v)];
    }
    for (int v = 1; v <= n; ++v)
        if (count[static_cast<std::size_t>(v)] != 2)
            throw ValidationError("word is not a permutation of the multiset {1,1,...,n,n}");
    // everything between the two copies of v must exceed v
    std::vector<int> first(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t i = 0; i < sp.word.size(); ++i) {
        int v = sp.word[i];
        if (first[static_cast<std::size_t>(v)] < 0) {
            first[static_cast<std::size_t>(v)] = static_cast<int>(i);
        } else {
            for (int j = first[static_cast<std::size_t>(v)] + 1; j < static_cast<int>(i); ++j)
                if (sp.word[static_cast<std::size_t>(j)] <= v)
                    throw ValidationError("entry between the two copies of " + std::to_string(v) +
                                          " does not exceed it");
        }
    }
}

std::vector<int> ascent_plateau_set(const StirlingPermutation& sp) {
    std::vector<int> out;
    int len = static_cast<int>(sp.word.size());
    for (int i = 1; i <= len - 1; ++i) {
        int prev = i == 1 ? 0 : sp.word[static_cast<std::size_t>(i) - 2];
        if (prev < sp.word[static_cast<std::size_t>(i) - 1] &&
            sp.word[static_cast<std::size_t>(i) - 1] == sp.word[static_cast<std::size_t>(i)])
            out.push_back(i);
    }
    return out;
}

int ascent_plateau_count(const StirlingPermutation& sp) {
    int count = 0;
    int len = static_cast<int>(sp.word.size());
    for (int i = 1; i <= len - 1; ++i) {
        int prev = i == 1 ? 0 : sp.word[static_cast<std::size_t>(i) - 2];
        if (prev < sp.word[static_cast<std::size_t>(i) - 1] &&
            sp.word[static_cast<std::size_t>(i) - 1] == sp.word[static_cast<std::size_t>(i)])
            ++count;
    }
    return count;
}

std::vector<int> ascent_set(const StirlingPermutation& sp) {
    std::vector<int> out;
    for (int i = 1; i < static_cast<int>(sp.word.size()); ++i)
        if (sp.word[static_cast<std::size_t>(i) - 1] < sp.word[static_cast<std::size_t>(i)])
            out.push_back(i);
    return out;
}

std::vector<int> plateau_set(const StirlingPermutation& sp) {
    std::vector<int> out;
    for (int i = 1; i < static_cast<int>(sp.word.size()); ++i)
        if (sp.word[static_cast<std::size_t>(i) - 1] == sp.word[static_cast<std::size_t>(i)])
            out.push_back(i);
    return out;
}

std::string to_string(const StirlingPermutation& sp) {
    std::string out;
    for (std::size_t i = 0; i < sp.word.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(sp.word[i]);
    }
    return out;
}

StirlingPermutation parse_stirling(std::string_view text) {
    std::vector<long long> vals = parse_csv_ints(text);
    if (vals.size() % 2 != 0) throw ValidationError("word length must be 2n");
    StirlingPermutation sp;
    sp.order = static_cast<int>(vals.size() / 2);
    sp.word.reserve(vals.size());
    for (long long v : vals) sp.word.push_back(static_cast<int>(v));
    validate(sp);
    return sp;
}

// ---------------------------------------------------------------------------
// Perfect matchings
// ---------------------------------------------------------------------------

void validate(const PerfectMatching& m) {
    int n = m.order;
    if (n < 1) throw ValidationError("order must be at least 1");
    if (static_cast<int>(m.blocks.size()) != n)
        throw ValidationError("matching must have exactly n blocks");
    std::vector<char> seen(static_cast<std::size_t>(2 * n) + 1, 0);
    int prev_smaller = 0;
    for (const auto& [a, b] : m.blocks) {
        if (a < 1 || b < 1 || a > 2 * n || b > 2 * n)
            throw ValidationError("block entry outside [2n]");
        if (a >= b) throw ValidationError("block must be written (smaller, larger)");
        if (a <= prev_smaller)
            throw ValidationError("smaller entries must strictly increase along the list");
        prev_smaller = a;
        if (seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)])
            throw ValidationError("blocks must partition [2n]");
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
    }
    for (int v = 1; v <= 2 * n; ++v)
        if (!seen[static_cast<std::size_t>(v)]) throw ValidationError("blocks must partition [2n]");
}

BlockCounts classify_blocks(const PerfectMatching& m) {
    BlockCounts c;
    for (const auto& [a, b] : m.blocks) {
        bool a_odd = a % 2 != 0;
        bool b_odd = b % 2 != 0;
        if (a_odd && b_odd)
            ++c.oo;
        else if (a_odd && !b_odd)
            ++c.oe;
        else if (!a_odd && b_odd)
            ++c.eo;
        else
            ++c.ee;
    }
    c.so = c.oo + c.oe;
    if (c.oo != c.ee || c.so != c.oe + c.ee)
        throw ValidationError("block class counts violate oo == ee; malformed matching");
    return c;
}

std::string to_string(const PerfectMatching& m) {
    std::string out;
    for (std::size_t i = 0; i < m.blocks.size(); ++i) {
        if (i > 0) out += '/';
        bool square = block_is_square(m.blocks[i]);
        out += square ? '[' : '(';
        out += std::to_string(m.blocks[i].first);
        out += ',';
        out += std::to_string(m.blocks[i].second);
        out += square ? ']' : ')';
    }
    return out;
}

PerfectMatching parse_matching(std::string_view text) {
    Cursor c{text};
    PerfectMatching m;
    std::vector<bool> square_written;
    while (true) {
        if (c.done()) throw ParseError("expected '[' or '('", c.pos);
        char open = c.peek();
        if (open != '[' && open != '(') throw ParseError("expected '[' or '('", c.pos);
        ++c.pos;
        long long a = c.signed_int();
        c.expect(',', "','");
        long long b = c.signed_int();
        c.expect(open == '[' ? ']' : ')', open == '[' ? "']'" : "')'");
        m.blocks.emplace_back(static_cast<int>(a), static_cast<int>(b));
        square_written.push_back(open == '[');
        if (c.done()) break;
        c.expect('/', "'/'");
    }
    m.order = static_cast<int>(m.blocks.size());
    validate(m);
    for (std::size_t i = 0; i < m.blocks.size(); ++i)
        if (square_written[i] != block_is_square(m.blocks[i]))
            throw ValidationError("bracket type inconsistent with parity at block " +
                                  std::to_string(i + 1));
    return m;
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

void validate(const Permutation& p) {
    int n = p.size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : p.one_line) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw ValidationError("one-line form is not a bijection on [n]");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::vector<std::vector<int>> standard_cycles(const Permutation& p) {
    int n = p.size();
    std::vector<std::vector<int>> cycles;
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            visited[static_cast<std::size_t>(cur)] = 1;
            cycle.push_back(cur);
            cur = p.image(cur);
        } while (cur != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

CycleStats cycle_statistics(const Permutation& p) {
    CycleStats s;
    for (int i = 1; i <= p.size(); ++i)
        if (p.image(i) > i) ++s.exc;
    for (const auto& cycle : standard_cycles(p)) {
        ++s.cyc;
        for (std::size_t j = 0; j + 1 < cycle.size(); ++j)
            if (cycle[j] > cycle[j + 1]) ++s.cdes;
    }
    return s;
}

std::string to_string(const Permutation& p) {
    std::string out;
    for (const auto& cycle : standard_cycles(p)) {
        out += '(';
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(cycle[j]);
        }
        out += ')';
    }
    return out;
}

std::string to_one_line_string(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.one_line.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.one_line[i]);
    }
    return out;
}

Permutation parse_permutation_cycles(std::string_view text) {
    Cursor c{text};
    std::vector<std::vector<int>> cycles;
    int total = 0;
    while (!c.done()) {
        c.expect('(', "'('");
        std::vector<int> cycle;
        while (true) {
            cycle.push_back(static_cast<int>(c.signed_int()));
            ++total;
            if (!c.done() && c.peek() == ',') {
                ++c.pos;
                continue;
            }
            break;
        }
        c.expect(')', "')'");
        cycles.push_back(std::move(cycle));
    }
    if (total == 0) throw ParseError("expected '('", 0);
    int n = total;
    Permutation p;
    p.one_line.assign(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int prev_min = 0;
    for (const auto& cycle : cycles) {
        int mn = *std::min_element(cycle.begin(), cycle.end());
        if (cycle.front() != mn)
            throw ValidationError("cycle must be written with its smallest entry first");
        if (mn <= prev_min)
            throw ValidationError("cycles must be sorted by ascending minima");
        prev_min = mn;
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            int v = cycle[j];
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw ValidationError("cycle form is not a permutation of [n]");
            seen[static_cast<std::size_t>(v)] = 1;
            int next = cycle[(j + 1) % cycle.size()];
            p.one_line[static_cast<std::size_t>(v) - 1] = next;
        }
    }
    validate(p);
    return p;
}

Permutation parse_permutation_one_line(std::string_view text) {
    std::vector<long long> vals = parse_csv_ints(text);
    Permutation p;
    p.one_line.reserve(vals.size());
    for (long long v : vals) p.one_line.push_back(static_cast<int>(v));
    validate(p);
    return p;
}

// ---------------------------------------------------------------------------
// MY-sequences
// ---------------------------------------------------------------------------

MYEntry MYEntry::of(int value) {
    if (value == 0) throw std::invalid_argument("MY entry must be a nonzero integer");
    MYEntry e;
    e.value_ = value;
    return e;
}

int MYEntry::value() const {
    if (is_star()) throw std::logic_error("star entry has no integer value");
    return value_;
}

bool MYEntry::canonical_less(MYEntry a, MYEntry b) {
    auto rank = [](MYEntry e) -> std::pair<int, int> {
        if (e.is_star()) return {2, 0};
        int v = e.value();
        return v > 0 ? std::pair<int, int>{0, v} : std::pair<int, int>{1, -v};
    };
    return rank(a) < rank(b);
}

bool my_canonical_less(const MYSequence& a, const MYSequence& b) {
    return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(),
                                        b.entries.end(), MYEntry::canonical_less);
}

MYValidation validate_my(std::span<const MYEntry> entries) {
    int pos = 0, neg = 0, star = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        MYEntry e = entries[i];
        if (i == 0) {
            if (!e.is_star()) return {false, 1};
        } else if (!e.is_star()) {
            int s = neg + star - 1;
            int t = pos;
            int v = e.value();
            if (v > 0 && v > 2 * (1 + s)) return {false, static_cast<int>(i) + 1};
            if (v < 0 && -v > 2 * t) return {false, static_cast<int>(i) + 1};
        }
        if (e.is_star())
            ++star;
        else if (e.value() > 0)
            ++pos;
        else
            ++neg;
    }
    return {true, 0};
}

MYStats my_statistics(const MYSequence& y) {
    MYStats s;
    for (MYEntry e : y.entries) {
        if (e.is_star())
            ++s.star;
        else if (e.value() > 0)
            ++s.pos;
        else
            ++s.neg;
    }
    return s;
}

std::string to_string(MYEntry e) { return e.is_star() ? "*" : std::to_string(e.value()); }

std::string to_string(const MYSequence& y) {
    std::string out;
    for (std::size_t i = 0; i < y.entries.size(); ++i) {
        if (i > 0) out += ',';
        out += to_string(y.entries[i]);
    }
    return out;
}

MYSequence parse_my(std::string_view text) {
    Cursor c{text};
    MYSequence y;
    while (true) {
        if (!c.done() && c.peek() == '*') {
            ++c.pos;
            y.entries.push_back(MYEntry::star());
        } else {
            std::size_t at = c.pos;
            long long v = c.signed_int();
            if (v == 0) throw ParseError("entry must be nonzero or '*'", at);
            y.entries.push_back(MYEntry::of(static_cast<int>(v)));
        }
        if (c.done()) break;
        c.expect(',', "','");
    }
    MYValidation check = validate_my(y.entries);
    if (!check.ok)
        throw ValidationError("MY-sequence condition violated at entry " +
                              std::to_string(check.first_bad_index));
    return y;
}

// ---------------------------------------------------------------------------
// Inversion sequences
// ---------------------------------------------------------------------------

void validate(const InversionSequence& e) {
    if (e.k < 1) throw ValidationError("k must be at least 1");
    for (std::size_t i = 0; i < e.entries.size(); ++i) {
        long long bound = static_cast<long long>(i) * e.k;
        if (e.entries[i] < 0 || e.entries[i] > bound)
            throw ValidationError("entry " + std::to_string(i + 1) + " outside [0, (i-1)k]");
    }
}

int inversion_ascents(const InversionSequence& e) {
    int count = 0;
    long long k = e.k;
    for (std::size_t i = 0; i + 1 < e.entries.size(); ++i) {
        // e_i/((i-1)k+1) < e_{i+1}/(ik+1), cross-multiplied exactly;
        // i here is 0-based
        BigInt lhs = BigInt(e.entries[i]) * (BigInt(static_cast<long long>(i + 1)) * k + 1);
        BigInt rhs = BigInt(e.entries[i + 1]) * (BigInt(static_cast<long long>(i)) * k + 1);
        if (lhs < rhs) ++count;
    }
    return count;
}

std::string to_string(const InversionSequence& e) {
    std::string out = std::to_string(e.k) + ":";
    for (std::size_t i = 0; i < e.entries.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(e.entries[i]);
    }
    return out;
}

InversionSequence parse_inversion_sequence(std::string_view text) {
    Cursor c{text};
    long long k = c.signed_int();
    c.expect(':', "':'");
    InversionSequence e;
    if (k < 1) throw ValidationError("k must be at least 1");
    e.k = static_cast<int>(k);
    e.entries = parse_csv_ints(text.substr(c.pos));
    validate(e);
    return e;
}

}  // namespace plateau

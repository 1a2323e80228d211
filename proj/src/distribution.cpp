#include "plateau/distribution.hpp"

#include <functional>
#include <stdexcept>

#include "plateau/enumerate.hpp"
#include "plateau/objects.hpp"

namespace plateau {

namespace {

[[noreturn]] void unknown_statistic(const std::string& stat, Family f) {
    throw std::invalid_argument("unknown statistic '" + stat + "' for family '" +
                                family_name(f) + "'");
}

template <typename Object>
using StatFn = std::function<long long(const Object&)>;

template <typename Object>
std::vector<StatFn<Object>> resolve(
    const std::vector<std::string>& selector, Family f,
    const std::map<std::string, StatFn<Object>>& known) {
    std::vector<StatFn<Object>> out;
    for (const std::string& name : selector) {
        auto it = known.find(name);
        if (it == known.end()) unknown_statistic(name, f);
        out.push_back(it->second);
    }
    return out;
}

template <typename Object, typename Enumerate>
StatisticDistribution tally(Enumerate&& enumerate, const std::vector<StatFn<Object>>& stats) {
    StatisticDistribution dist;
    dist.arity = static_cast<int>(stats.size());
    std::vector<long long> key(stats.size());
    enumerate([&](const Object& obj) {
        for (std::size_t i = 0; i < stats.size(); ++i) key[i] = stats[i](obj);
        dist.table[key] += 1;
        dist.total += 1;
    });
    return dist;
}

}  // namespace

Family parse_family(std::string_view name) {
    if (name == "stirling") return Family::stirling;
    if (name == "matching") return Family::matching;
    if (name == "perm" || name == "permutation") return Family::permutation;
    if (name == "my") return Family::my;
    if (name == "invseq") return Family::invseq;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::stirling: return "stirling";
        case Family::matching: return "matching";
        case Family::permutation: return "permutation";
        case Family::my: return "my";
        case Family::invseq: return "invseq";
    }
    throw std::logic_error("bad family");
}

std::vector<std::string> default_selector(Family f) {
    switch (f) {
        case Family::stirling: return {"ap"};
        case Family::matching: return {"so"};
        case Family::permutation: return {"exc", "cyc", "cdes"};
        case Family::my: return {"neg", "star", "pos"};
        case Family::invseq: return {"asc"};
    }
    throw std::logic_error("bad family");
}

StatisticDistribution family_distribution(Family family, int n,
                                          const std::vector<std::string>& selector, int k) {
    if (selector.empty()) throw std::invalid_argument("empty statistic selector");
    switch (family) {
        case Family::stirling: {
            static const std::map<std::string, StatFn<StirlingPermutation>> known{
                {"ap", [](const StirlingPermutation& s) { return ascent_plateau_count(s); }},
                {"asc",
                 [](const StirlingPermutation& s) {
                     return static_cast<long long>(ascent_set(s).size());
                 }},
                {"plat", [](const StirlingPermutation& s) {
                     return static_cast<long long>(plateau_set(s).size());
                 }}};
            auto stats = resolve(selector, family, known);
            return tally<StirlingPermutation>([&](auto&& fn) { for_each_stirling(n, fn); }, stats);
        }
        case Family::matching: {
            static const std::map<std::string, StatFn<PerfectMatching>> known{
                {"so", [](const PerfectMatching& m) { return classify_blocks(m).so; }},
                {"oo", [](const PerfectMatching& m) { return classify_blocks(m).oo; }},
                {"oe", [](const PerfectMatching& m) { return classify_blocks(m).oe; }},
                {"eo", [](const PerfectMatching& m) { return classify_blocks(m).eo; }},
                {"ee", [](const PerfectMatching& m) { return classify_blocks(m).ee; }}};
            auto stats = resolve(selector, family, known);
            return tally<PerfectMatching>([&](auto&& fn) { for_each_matching(n, fn); }, stats);
        }
        case Family::permutation: {
            static const std::map<std::string, StatFn<Permutation>> known{
                {"exc", [](const Permutation& p) { return cycle_statistics(p).exc; }},
                {"cyc", [](const Permutation& p) { return cycle_statistics(p).cyc; }},
                {"cdes", [](const Permutation& p) { return cycle_statistics(p).cdes; }}};
            auto stats = resolve(selector, family, known);
            return tally<Permutation>([&](auto&& fn) { for_each_permutation(n, fn); }, stats);
        }
        case Family::my: {
            static const std::map<std::string, StatFn<MYSequence>> known{
                {"pos", [](const MYSequence& y) { return my_statistics(y).pos; }},
                {"neg", [](const MYSequence& y) { return my_statistics(y).neg; }},
                {"star", [](const MYSequence& y) { return my_statistics(y).star; }}};
            auto stats = resolve(selector, family, known);
            return tally<MYSequence>([&](auto&& fn) { for_each_my(n, fn); }, stats);
        }
        case Family::invseq: {
            static const std::map<std::string, StatFn<InversionSequence>> known{
                {"asc", [](const InversionSequence& e) { return inversion_ascents(e); }}};
            auto stats = resolve(selector, family, known);
            return tally<InversionSequence>(
                [&](auto&& fn) { for_each_inversion_sequence(n, k, fn); }, stats);
        }
    }
    throw std::logic_error("bad family");
}

namespace {

std::string key_string(const std::vector<long long>& key) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(key[i]);
    }
    return out;
}

}  // namespace

std::string distribution_to_json(const StatisticDistribution& dist) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, count] : dist.table) {
        if (!first) out += ',';
        first = false;
        out += '"' + key_string(key) + "\":\"" + count.str() + '"';
    }
    out += '}';
    return out;
}

std::string distribution_to_csv(const StatisticDistribution& dist) {
    std::string out;
    if (dist.arity == 1) {
        out = "stat,count";
    } else {
        for (int i = 1; i <= dist.arity; ++i) out += "stat" + std::to_string(i) + ",";
        out += "count";
    }
    for (const auto& [key, count] : dist.table)
        out += "\n" + key_string(key) + "," + count.str();
    return out;
}

Polynomial distribution_to_polynomial(const StatisticDistribution& dist) {
    if (dist.arity != 1) throw std::invalid_argument("distribution arity must be 1");
    std::vector<BigInt> coeffs;
    for (const auto& [key, count] : dist.table) {
        long long d = key[0];
        if (d < 0) throw std::invalid_argument("negative statistic value");
        if (static_cast<std::size_t>(d) >= coeffs.size()) coeffs.resize(d + 1, BigInt(0));
        coeffs[static_cast<std::size_t>(d)] += count;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace plateau

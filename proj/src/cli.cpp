#include "plateau/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "plateau/bijections.hpp"
#include "plateau/distribution.hpp"
#include "plateau/enumerate.hpp"
#include "plateau/identities.hpp"
#include "plateau/objects.hpp"
#include "plateau/series.hpp"

namespace plateau {

namespace {

[[noreturn]] void usage_error(const std::string& message) {
    throw CLI::ValidationError("config", message);
}

std::string pick_format(const RunConfig& cfg, const std::string& fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

// Compact rendering for trace lines: contiguous digits for words of
// order <= 9, standard cycle form for permutations.
std::string compact_word(const StirlingPermutation& sp) {
    if (sp.order > 9) return to_string(sp);
    std::string s;
    for (int v : sp.word) s += static_cast<char>('0' + v);
    return s;
}

std::string quoted_list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ',';
        out += '"' + json_escape(items[i]) + '"';
    }
    return out + "]";
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.family.empty()) usage_error("enumerate requires --family");
    if (cfg.n < 1) usage_error("enumerate requires --n >= 1");
    std::string format = pick_format(cfg, "lines");
    if (format != "lines" && format != "json") usage_error("enumerate supports --format lines|json");
    Family family = parse_family(cfg.family);
    std::vector<std::string> collected;
    auto emit = [&](const std::string& text) {
        if (format == "lines")
            out << text << "\n";
        else
            collected.push_back(text);
    };
    switch (family) {
        case Family::stirling:
            for_each_stirling(cfg.n, [&](const StirlingPermutation& sp) { emit(to_string(sp)); });
            break;
        case Family::matching:
            for_each_matching(cfg.n, [&](const PerfectMatching& m) { emit(to_string(m)); });
            break;
        case Family::permutation:
            for_each_permutation(cfg.n, [&](const Permutation& p) { emit(to_string(p)); });
            break;
        case Family::my:
            for_each_my(cfg.n, [&](const MYSequence& y) { emit(to_string(y)); });
            break;
        case Family::invseq:
            for_each_inversion_sequence(cfg.n, cfg.k > 0 ? cfg.k : 1,
                                        [&](const InversionSequence& e) { emit(to_string(e)); });
            break;
    }
    if (format == "json") out << quoted_list(collected) << "\n";
    return 0;
}

int run_stats(const RunConfig& cfg, std::ostream& out) {
    if (cfg.family.empty()) usage_error("stats requires --family");
    Family family = parse_family(cfg.family);
    if (!cfg.input.empty()) {
        // statistics of a single object
        std::string format = pick_format(cfg, "json");
        if (format != "json") usage_error("single-object stats supports --format json");
        std::ostringstream s;
        switch (family) {
            case Family::stirling: {
                StirlingPermutation sp = parse_stirling(cfg.input);
                auto aps = ascent_plateau_set(sp);
                s << "{\"ap\":" << aps.size() << ",\"ascent_plateau_set\":[";
                for (std::size_t i = 0; i < aps.size(); ++i) s << (i ? "," : "") << aps[i];
                s << "],\"asc\":" << ascent_set(sp).size() << ",\"plat\":" << plateau_set(sp).size()
                  << "}";
                break;
            }
            case Family::matching: {
                PerfectMatching m = parse_matching(cfg.input);
                BlockCounts c = classify_blocks(m);
                s << "{\"oo\":" << c.oo << ",\"oe\":" << c.oe << ",\"eo\":" << c.eo
                  << ",\"ee\":" << c.ee << ",\"so\":" << c.so << "}";
                break;
            }
            case Family::permutation: {
                Permutation p = cfg.one_line ? parse_permutation_one_line(cfg.input)
                                             : parse_permutation_cycles(cfg.input);
                CycleStats c = cycle_statistics(p);
                s << "{\"exc\":" << c.exc << ",\"cyc\":" << c.cyc << ",\"cdes\":" << c.cdes
                  << ",\"cycles\":\"" << json_escape(to_string(p)) << "\"}";
                break;
            }
            case Family::my: {
                MYSequence y = parse_my(cfg.input);
                MYStats c = my_statistics(y);
                s << "{\"pos\":" << c.pos << ",\"neg\":" << c.neg << ",\"star\":" << c.star << "}";
                break;
            }
            case Family::invseq: {
                InversionSequence e = parse_inversion_sequence(cfg.input);
                s << "{\"asc\":" << inversion_ascents(e) << "}";
                break;
            }
        }
        out << s.str() << "\n";
        return 0;
    }
    if (cfg.n < 1) usage_error("stats requires --input or --n >= 1");
    std::string format = pick_format(cfg, "json");
    if (format != "json" && format != "csv") usage_error("stats supports --format json|csv");
    std::vector<std::string> selector = cfg.select.empty() ? default_selector(family) : cfg.select;
    StatisticDistribution dist = family_distribution(family, cfg.n, selector, cfg.k > 0 ? cfg.k : 1);
    out << (format == "json" ? distribution_to_json(dist) : distribution_to_csv(dist)) << "\n";
    return 0;
}

int run_map(const RunConfig& cfg, std::ostream& out) {
    if (cfg.bijection.empty()) usage_error("map requires --bijection");
    if (cfg.input.empty()) usage_error("map requires --input");
    std::string format = pick_format(cfg, "lines");
    if (format != "lines" && format != "json") usage_error("map supports --format lines|json");
    const std::string& b = cfg.bijection;

    auto emit_result = [&](const std::string& text) {
        if (format == "lines")
            out << text << "\n";
        else
            out << "{\"result\":\"" << json_escape(text) << "\"}\n";
    };

    if (b == "bb" || b == "lsp" || b == "lp") {
        MYSequence y = parse_my(cfg.input);
        if (cfg.trace) {
            if (b == "bb") {
                PerfectMatching state;
                state.order = 1;
                state.blocks = {{1, 2}};
                for (int k = 2; k <= y.size(); ++k) {
                    PerfectMatching next = bb_apply_step(state, y.entries[static_cast<std::size_t>(k) - 1]);
                    out << to_string(y.entries[static_cast<std::size_t>(k) - 1]) << " -> "
                        << to_string(state) << " => " << to_string(next) << "\n";
                    state = next;
                }
            } else if (b == "lsp") {
                StirlingPermutation state;
                state.order = 1;
                state.word = {1, 1};
                for (int k = 2; k <= y.size(); ++k) {
                    StirlingPermutation next =
                        lsp_apply_step(state, y.entries[static_cast<std::size_t>(k) - 1]);
                    out << to_string(y.entries[static_cast<std::size_t>(k) - 1]) << " -> "
                        << compact_word(state) << " => " << compact_word(next) << "\n";
                    state = next;
                }
            } else {
                Permutation state;
                state.one_line = {1};
                for (int k = 2; k <= y.size(); ++k) {
                    Permutation next = lp_apply_step(state, y.entries[static_cast<std::size_t>(k) - 1]);
                    out << to_string(y.entries[static_cast<std::size_t>(k) - 1]) << " -> "
                        << to_string(state) << " => " << to_string(next) << "\n";
                    state = next;
                }
            }
        }
        if (b == "bb") emit_result(to_string(bb_forward(y)));
        if (b == "lsp") emit_result(to_string(lsp_forward(y)));
        if (b == "lp") emit_result(to_string(lp_my_to_perm(y)));
        return 0;
    }

    if (b == "bb-inv") {
        PerfectMatching m = parse_matching(cfg.input);
        MYSequence y = bb_inverse(m);
        if (cfg.trace) {
            std::vector<PerfectMatching> states;
            PerfectMatching state;
            state.order = 1;
            state.blocks = {{1, 2}};
            states.push_back(state);
            for (int k = 2; k <= y.size(); ++k)
                states.push_back(bb_apply_step(states.back(), y.entries[static_cast<std::size_t>(k) - 1]));
            for (int k = y.size(); k >= 2; --k)
                out << "y_" << k << " = " << to_string(y.entries[static_cast<std::size_t>(k) - 1])
                    << ": " << to_string(states[static_cast<std::size_t>(k) - 1]) << " => "
                    << to_string(states[static_cast<std::size_t>(k) - 2]) << "\n";
        }
        emit_result(to_string(y));
        return 0;
    }

    if (b == "lsp-inv") {
        StirlingPermutation sp = parse_stirling(cfg.input);
        MYSequence y = lsp_inverse(sp);
        if (cfg.trace) {
            std::vector<StirlingPermutation> states;
            StirlingPermutation state;
            state.order = 1;
            state.word = {1, 1};
            states.push_back(state);
            for (int k = 2; k <= y.size(); ++k)
                states.push_back(lsp_apply_step(states.back(), y.entries[static_cast<std::size_t>(k) - 1]));
            for (int k = y.size(); k >= 2; --k)
                out << "y_" << k << " = " << to_string(y.entries[static_cast<std::size_t>(k) - 1])
                    << ": " << compact_word(states[static_cast<std::size_t>(k) - 1]) << " => "
                    << compact_word(states[static_cast<std::size_t>(k) - 2]) << "\n";
        }
        emit_result(to_string(y));
        return 0;
    }

    if (b == "lp-fiber") {
        Permutation p = cfg.one_line ? parse_permutation_one_line(cfg.input)
                                     : parse_permutation_cycles(cfg.input);
        std::vector<MYSequence> fiber = lp_fiber(p);
        if (cfg.trace && !fiber.empty()) {
            const MYSequence& first = fiber.front();
            Permutation state;
            state.one_line = {1};
            for (int k = 2; k <= first.size(); ++k) {
                MYEntry e = first.entries[static_cast<std::size_t>(k) - 1];
                Permutation next = lp_apply_step(state, e);
                std::string options;
                if (e.is_star()) {
                    options = "{*}";
                } else {
                    int v = e.value();
                    int j = (std::abs(v) + 1) / 2;
                    int sign = v > 0 ? 1 : -1;
                    options = "{" + std::to_string(sign * (2 * j - 1)) + "," +
                              std::to_string(sign * 2 * j) + "}";
                }
                out << to_string(state) << " => " << to_string(next) << ": y_" << k << " in "
                    << options << "\n";
                state = next;
            }
        }
        if (format == "lines") {
            for (const MYSequence& y : fiber) out << to_string(y) << "\n";
        } else {
            std::vector<std::string> texts;
            for (const MYSequence& y : fiber) texts.push_back(to_string(y));
            out << quoted_list(texts) << "\n";
        }
        return 0;
    }

    usage_error("unknown bijection '" + b + "' (bb, bb-inv, lsp, lsp-inv, lp, lp-fiber)");
}

int run_poly(const RunConfig& cfg, std::ostream& out) {
    if (cfg.family.empty()) usage_error("poly requires --family (N, A, Aq, Ak)");
    std::string format = pick_format(cfg, "lines");
    if (format != "lines" && format != "json") usage_error("poly supports --format lines|json");
    std::string text;
    if (cfg.family == "N") {
        NMethod method = cfg.method.empty() ? NMethod::recurrence : parse_n_method(cfg.method);
        text = poly_N(cfg.n, method).to_string();
    } else if (cfg.family == "A") {
        text = poly_eulerian(cfg.n).to_string();
    } else if (cfg.family == "Aq") {
        text = poly_q_eulerian(cfg.n).to_string();
    } else if (cfg.family == "Ak") {
        if (cfg.k < 1) usage_error("poly --family Ak requires --k >= 1");
        KMethod method = cfg.method.empty() ? KMethod::substitution : parse_k_method(cfg.method);
        text = poly_k_eulerian(cfg.n, cfg.k, method).to_string();
    } else {
        usage_error("unknown polynomial family '" + cfg.family + "' (N, A, Aq, Ak)");
    }
    if (format == "lines")
        out << text << "\n";
    else
        out << "{\"poly\":\"" << json_escape(text) << "\"}\n";
    return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.all == !cfg.identity.empty())
        usage_error("verify requires exactly one of --identity or --all");
    std::string format = pick_format(cfg, "json");
    if (format != "json" && format != "lines") usage_error("verify supports --format json|lines");
    std::vector<IdentityReport> reports;
    if (cfg.all) {
        reports = verify_all(cfg.max_n, cfg.order);
    } else {
        IdentityParams params;
        params.n = cfg.n;
        params.n_max = cfg.max_n;
        params.k = cfg.k;
        params.q = cfg.q;
        params.order = cfg.order;
        reports.push_back(verify_identity(cfg.identity, params));
    }
    bool all_pass = true;
    for (const IdentityReport& r : reports) all_pass = all_pass && r.pass;
    if (format == "lines") {
        for (const IdentityReport& r : reports) out << report_to_json(r, cfg.timings) << "\n";
    } else if (reports.size() == 1) {
        out << report_to_json(reports.front(), cfg.timings) << "\n";
    } else {
        out << "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i > 0) out << ",";
            out << "\n " << report_to_json(reports[i], cfg.timings);
        }
        out << "\n]\n";
    }
    return all_pass ? 0 : 1;
}

int run_series(const RunConfig& cfg, std::ostream& out) {
    if (cfg.egf.empty()) usage_error("series requires --egf (N, Ak, Aq)");
    int order = cfg.order >= 0 ? cfg.order : 8;
    std::string format = pick_format(cfg, "lines");
    if (format != "lines" && format != "json") usage_error("series supports --format lines|json");
    TruncatedSeries s(order);
    if (cfg.egf == "N") {
        for (int j = 0; j <= order; ++j)
            s.set_coeff(j, RationalPolynomial(poly_N(j, NMethod::recurrence),
                                              factorial(static_cast<unsigned>(j))));
    } else if (cfg.egf == "Ak") {
        if (cfg.k < 1) usage_error("series --egf Ak requires --k >= 1");
        for (int j = 0; j <= order; ++j)
            s.set_coeff(j, RationalPolynomial(poly_k_eulerian(j, cfg.k, KMethod::substitution),
                                              factorial(static_cast<unsigned>(j))));
    } else if (cfg.egf == "Aq") {
        if (cfg.q < 1) usage_error("series --egf Aq requires --q >= 1");
        s.set_coeff(0, RationalPolynomial(Polynomial::constant(1)));
        for (int j = 1; j <= order; ++j)
            s.set_coeff(j, RationalPolynomial(poly_q_eulerian(j).eval_q(cfg.q),
                                              factorial(static_cast<unsigned>(j))));
    } else {
        usage_error("unknown EGF '" + cfg.egf + "' (N, Ak, Aq)");
    }
    if (format == "lines") {
        for (int j = 0; j <= order; ++j)
            out << "z^" << j << ": " << s.coeff(j).to_string() << "\n";
    } else {
        std::vector<std::string> texts;
        for (int j = 0; j <= order; ++j) texts.push_back(s.coeff(j).to_string());
        out << "{\"order\":" << order << ",\"coeffs\":" << quoted_list(texts) << "}\n";
    }
    return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.subcommand == "enumerate") return run_enumerate(cfg, out);
        if (cfg.subcommand == "stats") return run_stats(cfg, out);
        if (cfg.subcommand == "map") return run_map(cfg, out);
        if (cfg.subcommand == "poly") return run_poly(cfg, out);
        if (cfg.subcommand == "verify") return run_verify(cfg, out);
        if (cfg.subcommand == "series") return run_series(cfg, out);
        err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "invalid object: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"exact engine for Stirling permutations, perfect matchings, cycle-form "
                 "permutations and MY-sequences"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format (json, lines, csv)");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list a family in canonical order");
    enumerate->add_option("--family", cfg.family, "stirling, matching, perm, my, invseq")->required();
    enumerate->add_option("--n", cfg.n, "order")->required();
    enumerate->add_option("--k", cfg.k, "k for invseq (default 1)");
    add_common(enumerate);
    enumerate->callback([&] { cfg.subcommand = "enumerate"; });

    CLI::App* stats = app.add_subcommand("stats", "statistics of one object or a whole family");
    stats->add_option("--family", cfg.family, "stirling, matching, perm, my, invseq")->required();
    stats->add_option("--input", cfg.input, "one object in its text form");
    stats->add_option("--n", cfg.n, "order for a family distribution");
    stats->add_option("--k", cfg.k, "k for invseq (default 1)");
    stats->add_option("--select", cfg.select, "statistic tuple, e.g. --select neg,star,pos")
        ->delimiter(',');
    stats->add_flag("--one-line", cfg.one_line, "read permutations in one-line form");
    add_common(stats);
    stats->callback([&] { cfg.subcommand = "stats"; });

    CLI::App* map = app.add_subcommand("map", "apply a bijection");
    map->add_option("--bijection", cfg.bijection, "bb, bb-inv, lsp, lsp-inv, lp, lp-fiber")->required();
    map->add_option("--input", cfg.input, "source object in its text form")->required();
    map->add_flag("--trace", cfg.trace, "print one line per step");
    map->add_flag("--one-line", cfg.one_line, "read permutations in one-line form");
    add_common(map);
    map->callback([&] { cfg.subcommand = "map"; });

    CLI::App* poly = app.add_subcommand("poly", "polynomial families");
    poly->add_option("--family", cfg.family, "N, A, Aq, Ak")->required();
    poly->add_option("--n", cfg.n, "index")->required();
    poly->add_option("--method", cfg.method,
                     "N: stirling, matching, my, perm-exc, perm-cdes, recurrence; "
                     "Ak: invseq, substitution");
    poly->add_option("--k", cfg.k, "k for the Ak family");
    add_common(poly);
    poly->callback([&] { cfg.subcommand = "poly"; });

    CLI::App* verify = app.add_subcommand("verify", "check identities from the catalog");
    verify->add_option("--identity", cfg.identity, "identity id");
    verify->add_flag("--all", cfg.all, "run the whole catalog");
    verify->add_option("--n", cfg.n, "check a single n");
    verify->add_option("--max-n", cfg.max_n, "replace the default range bound");
    verify->add_option("--k", cfg.k, "k parameter where applicable");
    verify->add_option("--q", cfg.q, "q parameter for egf-Aq");
    verify->add_option("--order", cfg.order, "series order (default 8)");
    verify->add_flag("--timings", cfg.timings, "include elapsed_ms in reports");
    add_common(verify);
    verify->callback([&] { cfg.subcommand = "verify"; });

    CLI::App* series = app.add_subcommand("series", "truncated exponential generating functions");
    series->add_option("--egf", cfg.egf, "N, Ak, Aq")->required();
    series->add_option("--order", cfg.order, "truncation order (default 8)");
    series->add_option("--k", cfg.k, "k for Ak");
    series->add_option("--q", cfg.q, "q for Aq");
    add_common(series);
    series->callback([&] { cfg.subcommand = "series"; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return run(cfg, out, err);
}

}  // namespace plateau

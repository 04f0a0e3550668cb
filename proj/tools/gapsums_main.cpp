#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gapsums/acceptance.hpp"
#include "gapsums/harness.hpp"

using namespace gapsums;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "jsonl" || name == "json-lines") return ReportFormat::json_lines;
    throw PreconditionError("unknown format: " + name);
}

std::vector<std::uint64_t> parse_exponents(const std::string& dotted) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(dotted);
    std::string part;
    while (std::getline(ss, part, '.')) out.push_back(std::stoull(part));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"character and exponential sums over generalized arithmetic progressions"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate sums over a family of moduli and GAPs");
    std::string config_path, output, format_name;
    SweepConfig cfg;
    bool seed_given = false, config_has_seed = false;
    std::uint64_t seed_flag = 0;
    sweep_cmd->add_option("--config", config_path, "JSON config file");
    auto* qmin_o = sweep_cmd->add_option("--q-min", cfg.q_min);
    auto* qmax_o = sweep_cmd->add_option("--q-max", cfg.q_max);
    auto* primes_o = sweep_cmd->add_flag("--primes-only", cfg.primes_only);
    auto* r_o = sweep_cmd->add_option("--r", cfg.r);
    auto* s_o = sweep_cmd->add_option("--s", cfg.s);
    auto* kinds_o = sweep_cmd->add_option("--kind", cfg.kinds, "char/poly/multilinear (repeatable)");
    auto* exh_o = sweep_cmd->add_flag("--exhaustive-intervals,!--no-exhaustive-intervals",
                                      cfg.exhaustive_intervals);
    auto* rand_o = sweep_cmd->add_option("--random-gaps", cfg.random_gaps_per_q);
    auto* hmin_o = sweep_cmd->add_option("--hmin", cfg.hmin);
    auto* hmax_o = sweep_cmd->add_option("--hmax", cfg.hmax);
    auto* maxchi_o = sweep_cmd->add_option("--max-chars", cfg.max_chars_per_q);
    auto* deg_o = sweep_cmd->add_option("--degree", cfg.poly_degrees, "polynomial degrees (repeatable)");
    auto* ppd_o = sweep_cmd->add_option("--polys-per-degree", cfg.polys_per_degree);
    sweep_cmd->add_option("--seed", seed_flag)->each([&](const std::string&) { seed_given = true; });
    sweep_cmd->add_option("--output", output, "write report here instead of stdout");
    sweep_cmd->add_option("--format", format_name, "csv (default) or jsonl");

    // search
    auto* search_cmd = app.add_subcommand("search", "extremal character-sum search over GAPs mod q");
    std::uint64_t sq = 0, sseed = 0;
    int sr = 1;
    long budget = 200000;
    search_cmd->add_option("--q", sq)->required();
    search_cmd->add_option("--r", sr);
    search_cmd->add_option("--budget", budget);
    search_cmd->add_option("--seed", sseed)->required();

    // demo-counterexample
    auto* demo_cmd = app.add_subcommand(
        "demo-counterexample", "collapse of the completion bound for a GAP improper in Z_q");
    std::uint64_t dq = 13;
    std::int64_t dH = 4;
    demo_cmd->add_option("--q", dq);
    demo_cmd->add_option("--H", dH);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    int only = 0;
    std::string constants_path;
    verify_cmd->add_option("--only", only, "run a single criterion (1-10)");
    verify_cmd->add_option("--constants", constants_path, "measured-constants JSON file");

    // l1norm
    auto* l1_cmd = app.add_subcommand("l1norm", "l1 norm of a GAP's Fourier coefficients");
    std::string gap_json, gap_file;
    l1_cmd->add_option("--gap", gap_json, "GAP as inline JSON");
    l1_cmd->add_option("--gap-file", gap_file, "GAP as a JSON file");

    // charsum
    auto* cs_cmd = app.add_subcommand("charsum", "one character sum over one GAP");
    std::uint64_t cq = 0;
    std::string chi_spec, cs_gap_json, cs_gap_file;
    cs_cmd->add_option("--q", cq)->required();
    cs_cmd->add_option("--chi", chi_spec, "character exponents, dotted (e.g. 2.0)")->required();
    cs_cmd->add_option("--gap", cs_gap_json, "GAP as inline JSON");
    cs_cmd->add_option("--gap-file", cs_gap_file, "GAP as a JSON file");
    std::string cs_format = "csv";
    cs_cmd->add_option("--format", cs_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (sweep_cmd->parsed()) {
        if (!config_path.empty()) {
            std::string text = slurp(config_path);
            cfg = SweepConfig::from_json(text);
            config_has_seed = nlohmann::json::parse(text).contains("seed");
            // Re-apply flag overrides on top of the file.
            app.clear();
            try {
                app.parse(argc, argv);
            } catch (const CLI::ParseError& e) {
                return app.exit(e);
            }
            (void)qmin_o; (void)qmax_o; (void)primes_o; (void)r_o; (void)s_o;
            (void)kinds_o; (void)exh_o; (void)rand_o; (void)hmin_o;
            (void)hmax_o; (void)maxchi_o; (void)deg_o; (void)ppd_o;
        }
        if (seed_given) cfg.seed = seed_flag;
        if (cfg.random_gaps_per_q > 0 && !seed_given && !config_has_seed)
            throw PreconditionError("randomized sweep needs an explicit seed "
                                    "(--seed or \"seed\" in the config)");
        if (!output.empty()) cfg.output_path = output;
        if (!format_name.empty()) cfg.format = parse_format(format_name);
        auto rows = sweep(cfg);
        if (cfg.output_path.empty())
            std::cout << format_report(rows, cfg.format);
        else
            emit_report(rows, cfg.format, cfg.output_path);
        std::fprintf(stderr, "%zu rows\n", rows.size());
        return 0;
    }

    if (search_cmd->parsed()) {
        ExtremalResult res = extremal_search(sq, sr, budget, sseed);
        std::printf("{\"q\":%llu,\"r\":%d,\"mode\":\"%s\",\"max_magnitude\":%.12g,"
                    "\"ratio_to_shape\":%.12g,\"character_id\":\"%s\","
                    "\"gap\":%s,\"evaluations\":%ld}\n",
                    static_cast<unsigned long long>(res.q), res.r,
                    res.exhaustive ? "exhaustive" : "heuristic-lower-bound",
                    res.max_magnitude, res.ratio_to_shape,
                    res.character_id.c_str(),
                    res.gap_json.empty() ? "null" : res.gap_json.c_str(),
                    res.evaluations);
        return 0;
    }

    if (demo_cmd->parsed()) {
        CounterexampleReport rep = counterexample_demo(dq, dH);
        std::printf("GAP {h1 + h2*(q-1)} mod q, q=%llu H=%lld, character %s\n",
                    static_cast<unsigned long long>(rep.q),
                    static_cast<long long>(rep.H), rep.character_id.c_str());
        std::printf("  max element multiplicity in Z_q: %lld (proper over Z, collapses mod q)\n",
                    static_cast<long long>(rep.max_multiplicity));
        std::printf("  sum_{h1,h2} chi(h1-h2)      = %.12g + %.12gi\n",
                    rep.double_sum.real(), rep.double_sum.imag());
        std::printf("  2 sum_n chi(n)(H-n)         = %.12g + %.12gi\n",
                    rep.weighted_sum.real(), rep.weighted_sum.imag());
        std::printf("  |difference|                = %.3g\n", rep.difference);
        return rep.difference <= 1e-9 ? 0 : 2;
    }

    if (verify_cmd->parsed()) {
        AcceptanceOptions opts;
        opts.constants = constants_path.empty() ? default_constants()
                                                : MeasuredConstants::load(constants_path);
        if (only != 0) opts.only = only;
        auto results = run_acceptance(opts, std::cout);
        return acceptance_passed(results) ? 0 : 2;
    }

    if (l1_cmd->parsed() || cs_cmd->parsed()) {
        std::string gj = l1_cmd->parsed() ? gap_json : cs_gap_json;
        std::string gf = l1_cmd->parsed() ? gap_file : cs_gap_file;
        if (gj.empty() && !gf.empty()) gj = slurp(gf);
        if (gj.empty()) throw PreconditionError("need --gap or --gap-file");
        Gap g = Gap::from_json(gj);
        if (l1_cmd->parsed()) {
            FourierProfile p = fourier_profile(g);
            bool proper = is_proper_kernel(g);
            std::printf("{\"l1\":%.12g,\"linf\":%.12g,\"l2_squared\":%.12g,"
                        "\"proper\":%s", p.l1, p.linf, p.l2_squared,
                        proper ? "true" : "false");
            if (proper)
                std::printf(",\"bound\":%.12g,\"parseval_relative_error\":%.3g",
                            l1_bound(g), p.parseval_relative_error());
            std::printf("}\n");
            return 0;
        }
        auto group = make_character_group(cq);
        DirichletCharacter chi = group->character(parse_exponents(chi_spec));
        SumReport rep = character_sum_over_gap(chi, g);
        std::cout << format_report({rep}, parse_format(cs_format));
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvariantViolation& e) {
        std::fprintf(stderr, "invariant violation: %s\n", e.what());
        return 2;
    } catch (const ResourceError& e) {
        std::fprintf(stderr, "resource guard: %s\n", e.what());
        return 3;
    } catch (const SamplingError& e) {
        std::fprintf(stderr, "sampling gave up: %s\n", e.what());
        return 3;
    } catch (const IOError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

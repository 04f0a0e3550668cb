#include "gapsums/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gapsums/rng.hpp"

namespace gapsums {

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

ReportFormat format_from_string(const std::string& s) {
    if (s == "csv") return ReportFormat::csv;
    if (s == "json-lines" || s == "jsonl") return ReportFormat::json_lines;
    throw PreconditionError("unknown report format: " + s);
}

std::string format_to_string(ReportFormat f) {
    return f == ReportFormat::csv ? "csv" : "json-lines";
}

} // namespace

SweepConfig SweepConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SweepConfig c;
    c.q_min = j.value("q_min", c.q_min);
    c.q_max = j.value("q_max", c.q_max);
    c.primes_only = j.value("primes_only", c.primes_only);
    c.r = j.value("r", c.r);
    c.s = j.value("s", c.s);
    if (j.contains("kinds")) c.kinds = j["kinds"].get<std::vector<std::string>>();
    c.exhaustive_intervals = j.value("exhaustive_intervals", c.exhaustive_intervals);
    c.random_gaps_per_q = j.value("random_gaps_per_q", c.random_gaps_per_q);
    c.hmin = j.value("hmin", c.hmin);
    c.hmax = j.value("hmax", c.hmax);
    c.max_chars_per_q = j.value("max_chars_per_q", c.max_chars_per_q);
    if (j.contains("poly_degrees"))
        c.poly_degrees = j["poly_degrees"].get<std::vector<int>>();
    c.polys_per_degree = j.value("polys_per_degree", c.polys_per_degree);
    c.seed = j.value("seed", c.seed);
    c.output_path = j.value("output_path", c.output_path);
    if (j.contains("format")) c.format = format_from_string(j["format"]);
    return c;
}

std::string SweepConfig::to_json() const {
    nlohmann::json j;
    j["q_min"] = q_min;
    j["q_max"] = q_max;
    j["primes_only"] = primes_only;
    j["r"] = r;
    j["s"] = s;
    j["kinds"] = kinds;
    j["exhaustive_intervals"] = exhaustive_intervals;
    j["random_gaps_per_q"] = random_gaps_per_q;
    j["hmin"] = hmin;
    j["hmax"] = hmax;
    j["max_chars_per_q"] = max_chars_per_q;
    j["poly_degrees"] = poly_degrees;
    j["polys_per_degree"] = polys_per_degree;
    j["seed"] = seed;
    j["output_path"] = output_path;
    j["format"] = format_to_string(format);
    return j.dump();
}

namespace {

void check_chain(const SumReport& rep) {
    if (rep.chain_bound && rep.magnitude > *rep.chain_bound + 1e-6) {
        throw InvariantViolation(
            "completion chain violated: |sum| = " + fmt12(rep.magnitude) +
            " > bound " + fmt12(*rep.chain_bound) + " for " + rep.kind +
            " q=" + std::to_string(rep.q) + " char=" + rep.character_id +
            " gap=" + rep.gap_json);
    }
}

std::vector<Gap> gap_family(const Modulus& mod, const SweepConfig& c,
                            SplitMix64& rng) {
    std::vector<Gap> gaps;
    std::int64_t q = static_cast<std::int64_t>(mod.value());
    std::int64_t hmax = c.hmax > 0 ? std::min(c.hmax, q) : q;
    std::int64_t hmin = std::max<std::int64_t>(2, c.hmin);
    if (hmin > hmax) return gaps;
    if (c.exhaustive_intervals && c.r == 1 && c.s == 1) {
        for (std::int64_t H = hmin; H <= hmax; ++H)
            gaps.emplace_back(mod, 1, Vec{0}, std::vector<Vec>{{1}},
                              std::vector<std::int64_t>{H});
    }
    for (int i = 0; i < c.random_gaps_per_q; ++i) {
        try {
            gaps.push_back(random_proper_gap(mod, c.s, c.r, hmin, hmax, rng));
        } catch (const SamplingError&) {
            break;  // no proper GAP with these bounds; stop sampling this q
        }
    }
    return gaps;
}

} // namespace

std::vector<SumReport> sweep(const SweepConfig& config) {
    std::vector<SumReport> rows;
    SplitMix64 rng(config.seed);
    for (std::uint64_t qv = config.q_min; qv <= config.q_max; ++qv) {
        if (qv < 3) continue;
        if (config.primes_only && !is_prime_u64(qv)) continue;
        Modulus mod = Modulus::factorize(qv);
        auto gaps = gap_family(mod, config, rng);
        if (gaps.empty()) continue;

        bool want_char = std::count(config.kinds.begin(), config.kinds.end(), "char");
        bool want_multi =
            std::count(config.kinds.begin(), config.kinds.end(), "multilinear");
        bool want_poly = std::count(config.kinds.begin(), config.kinds.end(), "poly");

        if (want_char || want_multi) {
            auto group = make_character_group(qv);
            std::vector<DirichletCharacter> prim;
            for (const auto& chi : group->enumerate())
                if (chi.is_primitive()) prim.push_back(chi);
            if (config.max_chars_per_q > 0 &&
                static_cast<int>(prim.size()) > config.max_chars_per_q)
                prim.erase(prim.begin() + config.max_chars_per_q, prim.end());
            for (const auto& g : gaps) {
                for (const auto& chi : prim) {
                    if (want_char && g.dimension() == 1) {
                        rows.push_back(character_sum_over_gap(chi, g));
                        check_chain(rows.back());
                    }
                    if (want_multi && g.dimension() >= 1) {
                        rows.push_back(multilinear_character_sum(chi, g));
                        check_chain(rows.back());
                    }
                }
            }
        }
        if (want_poly && mod.is_prime() && config.s == 1) {
            for (int d : config.poly_degrees) {
                if (static_cast<std::uint64_t>(d) >= qv || d < 2) continue;
                for (int i = 0; i < config.polys_per_degree; ++i) {
                    std::vector<std::int64_t> coeffs(d + 1);
                    for (auto& cc : coeffs)
                        cc = static_cast<std::int64_t>(rng.below(qv));
                    coeffs[d] = 1 + static_cast<std::int64_t>(rng.below(qv - 1));
                    PolynomialModQ h(mod, coeffs);
                    double linf = poly_fourier_linf(h);
                    for (const auto& g : gaps) {
                        if (g.dimension() != 1) continue;
                        rows.push_back(poly_exp_sum_over_gap(h, g, linf));
                        check_chain(rows.back());
                    }
                }
            }
        }
    }
    return rows;
}

namespace {

struct Witness {
    Gap gap;
    DirichletCharacter chi;
    double magnitude;
};

// Lexicographic order on (generators, lengths, character exponents, base).
bool witness_less(const Witness& a, const Witness& b) {
    if (a.gap.generators() != b.gap.generators())
        return a.gap.generators() < b.gap.generators();
    if (a.gap.lengths() != b.gap.lengths())
        return a.gap.lengths() < b.gap.lengths();
    if (a.chi.exponents() != b.chi.exponents())
        return a.chi.exponents() < b.chi.exponents();
    return a.gap.base() < b.gap.base();
}

} // namespace

ExtremalResult extremal_search(std::uint64_t q, int r, long budget,
                               std::uint64_t seed) {
    ExtremalResult res;
    res.q = q;
    res.r = r;
    if (budget <= 0) return res;

    Modulus mod = Modulus::factorize(q);
    auto group = make_character_group(q);
    std::vector<DirichletCharacter> prim;
    for (const auto& chi : group->enumerate())
        if (chi.is_primitive()) prim.push_back(chi);
    if (prim.empty()) return res;

    double shape = std::sqrt(static_cast<double>(q)) *
                   std::pow(std::log(static_cast<double>(q)), r);
    std::optional<Witness> best;
    long used = 0;
    auto consider = [&](const Gap& g, const DirichletCharacter& chi) {
        cplx sum{0.0, 0.0};
        for (const auto& a : distinct_elements(g)) sum += chi(a[0]);
        ++used;
        double mag = std::abs(sum);
        Witness w{g, chi, mag};
        if (!best || mag > best->magnitude + 1e-12 ||
            (std::abs(mag - best->magnitude) <= 1e-12 && witness_less(w, *best)))
            best = std::move(w);
        return mag;
    };

    // Space: base x generators x lengths x primitive characters.
    double space = static_cast<double>(q) * static_cast<double>(prim.size());
    for (int i = 0; i < r; ++i)
        space *= static_cast<double>(q) * static_cast<double>(q - 1);
    if (space <= static_cast<double>(budget)) {
        res.exhaustive = true;
        std::vector<std::int64_t> gens(r, 0), lens(r, 2);
        std::function<void(int)> rec_gens = [&](int i) {
            if (i == r) {
                std::function<void(int)> rec_lens = [&](int j) {
                    if (j == r) {
                        std::vector<Vec> gv;
                        for (auto g : gens) gv.push_back({g});
                        if (!no_small_kernel(mod, gv, lens)) return;
                        for (std::int64_t a0 = 0;
                             a0 < static_cast<std::int64_t>(q); ++a0) {
                            Gap g(mod, 1, {a0}, gv, lens);
                            for (const auto& chi : prim) consider(g, chi);
                        }
                        return;
                    }
                    for (lens[j] = 2; lens[j] <= static_cast<std::int64_t>(q);
                         ++lens[j])
                        rec_lens(j + 1);
                };
                rec_lens(0);
                return;
            }
            for (gens[i] = 0; gens[i] < static_cast<std::int64_t>(q); ++gens[i])
                rec_gens(i + 1);
        };
        rec_gens(0);
    } else {
        SplitMix64 rng(seed);
        while (used < budget) {
            Gap current = [&] {
                try {
                    return random_proper_gap(mod, 1, r, 2,
                                             static_cast<std::int64_t>(q), rng);
                } catch (const SamplingError&) {
                    return Gap(mod, 1, {0}, std::vector<Vec>(r, Vec{1}),
                               std::vector<std::int64_t>(r, 2));
                }
            }();
            const DirichletCharacter& chi = prim[rng.below(prim.size())];
            double cur = consider(current, chi);
            int stale = 0;
            while (used < budget && stale < 40) {
                Gap cand = current;
                Vec base = cand.base();
                std::vector<Vec> gv = cand.generators();
                std::vector<std::int64_t> lv = cand.lengths();
                switch (rng.below(3)) {
                    case 0: {
                        int i = static_cast<int>(rng.below(r));
                        gv[i][0] = mod.reduce(gv[i][0] + rng.range(-2, 2));
                        break;
                    }
                    case 1: {
                        int i = static_cast<int>(rng.below(r));
                        lv[i] = std::clamp<std::int64_t>(
                            lv[i] + rng.range(-3, 3), 2,
                            static_cast<std::int64_t>(q));
                        break;
                    }
                    default:
                        base[0] = mod.reduce(base[0] + rng.range(-3, 3));
                }
                Gap next(mod, 1, base, gv, lv);
                if (!is_proper_kernel(next)) {
                    ++stale;
                    continue;
                }
                double mag = consider(next, chi);
                if (mag > cur) {
                    cur = mag;
                    current = next;
                    stale = 0;
                } else {
                    ++stale;
                }
            }
        }
    }

    res.empty = false;
    res.gap_json = best->gap.to_json();
    res.character_id = best->chi.id();
    res.max_magnitude = best->magnitude;
    res.ratio_to_shape = best->magnitude / shape;
    res.evaluations = used;
    return res;
}

CounterexampleReport counterexample_demo(std::uint64_t q, std::int64_t H) {
    if (H < 1 || 2 * H > static_cast<std::int64_t>(q))
        throw PreconditionError("counterexample_demo: need 1 <= H <= q/2");
    auto group = make_character_group(q);
    std::optional<DirichletCharacter> even;
    for (const auto& chi : group->enumerate()) {
        if (chi.is_primitive() && chi.is_even()) {
            even = chi;
            break;
        }
    }
    if (!even)
        throw PreconditionError(
            "counterexample_demo: no even primitive character mod " +
            std::to_string(q));
    CounterexampleReport rep;
    rep.q = q;
    rep.H = H;
    rep.character_id = even->id();
    // A = {h1 + h2 (q-1) : 1 <= h1,h2 <= H} as a multiset of residues.
    std::vector<std::int64_t> mult(q, 0);
    Modulus mod = Modulus::factorize(q);
    for (std::int64_t h1 = 1; h1 <= H; ++h1) {
        for (std::int64_t h2 = 1; h2 <= H; ++h2) {
            rep.double_sum += (*even)(h1 - h2);
            ++mult[static_cast<std::size_t>(mod.reduce(h1 - h2))];
        }
    }
    for (std::int64_t n = 1; n <= H; ++n)
        rep.weighted_sum += (*even)(n) * static_cast<double>(H - n);
    rep.weighted_sum *= 2.0;
    rep.difference = std::abs(rep.double_sum - rep.weighted_sum);
    rep.max_multiplicity = *std::max_element(mult.begin(), mult.end());
    return rep;
}

namespace {

const char* kCsvHeader =
    "kind,q,s,r,character_id,gap_json,sum_re,sum_im,magnitude,chain_bound,"
    "shape_bound,ratio";

std::string csv_row(const SumReport& rep) {
    std::ostringstream os;
    os << rep.kind << "," << rep.q << "," << rep.s << "," << rep.r << ","
       << csv_quote(rep.character_id) << "," << csv_quote(rep.gap_json) << ","
       << fmt12(rep.sum.real()) << "," << fmt12(rep.sum.imag()) << ","
       << fmt12(rep.magnitude) << ","
       << (rep.chain_bound ? fmt12(*rep.chain_bound) : "") << ","
       << fmt12(rep.shape_bound) << "," << fmt12(rep.ratio_to_shape);
    return os.str();
}

std::string jsonl_row(const SumReport& rep) {
    std::ostringstream os;
    os << "{\"kind\":\"" << rep.kind << "\",\"q\":" << rep.q
       << ",\"s\":" << rep.s << ",\"r\":" << rep.r << ",\"character_id\":"
       << nlohmann::json(rep.character_id).dump()
       << ",\"gap_json\":" << nlohmann::json(rep.gap_json).dump()
       << ",\"sum_re\":" << fmt12(rep.sum.real())
       << ",\"sum_im\":" << fmt12(rep.sum.imag())
       << ",\"magnitude\":" << fmt12(rep.magnitude) << ",\"chain_bound\":"
       << (rep.chain_bound ? fmt12(*rep.chain_bound) : "null")
       << ",\"shape_bound\":" << fmt12(rep.shape_bound)
       << ",\"ratio\":" << fmt12(rep.ratio_to_shape) << "}";
    return os.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::string format_report(const std::vector<SumReport>& rows, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::csv) {
        os << kCsvHeader << "\n";
        for (const auto& r : rows) os << csv_row(r) << "\n";
    } else {
        for (const auto& r : rows) os << jsonl_row(r) << "\n";
    }
    return os.str();
}

void emit_report(const std::vector<SumReport>& rows, ReportFormat format,
                 const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open report for writing: " + path);
    out << format_report(rows, format);
    if (!out) throw IOError("write failure: " + path);
}

std::vector<SumReport> parse_report(const std::string& text, ReportFormat format) {
    std::vector<SumReport> rows;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (format == ReportFormat::csv) {
            if (first) {
                first = false;
                if (line == kCsvHeader) continue;
            }
            auto f = split_csv_line(line);
            if (f.size() != 12) throw IOError("malformed CSV row: " + line);
            SumReport r;
            r.kind = f[0];
            r.q = std::stoull(f[1]);
            r.s = std::stoi(f[2]);
            r.r = std::stoi(f[3]);
            r.character_id = f[4];
            r.gap_json = f[5];
            r.sum = {std::stod(f[6]), std::stod(f[7])};
            r.magnitude = std::stod(f[8]);
            if (!f[9].empty()) r.chain_bound = std::stod(f[9]);
            r.shape_bound = std::stod(f[10]);
            r.ratio_to_shape = std::stod(f[11]);
            rows.push_back(std::move(r));
        } else {
            nlohmann::json j = nlohmann::json::parse(line);
            SumReport r;
            r.kind = j.at("kind");
            r.q = j.at("q");
            r.s = j.at("s");
            r.r = j.at("r");
            r.character_id = j.at("character_id");
            r.gap_json = j.at("gap_json");
            r.sum = {j.at("sum_re").get<double>(), j.at("sum_im").get<double>()};
            r.magnitude = j.at("magnitude");
            if (!j.at("chain_bound").is_null())
                r.chain_bound = j.at("chain_bound").get<double>();
            r.shape_bound = j.at("shape_bound");
            r.ratio_to_shape = j.at("ratio");
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

} // namespace gapsums

#include "gapsums/gap.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gapsums {

Gap::Gap(Modulus q, int s, Vec base, std::vector<Vec> generators,
         std::vector<std::int64_t> lengths)
    : q_(q), s_(s), base_(std::move(base)), generators_(std::move(generators)),
      lengths_(std::move(lengths)) {
    if (s_ < 1) throw PreconditionError("Gap: dimension must be >= 1");
    if (generators_.empty()) throw PreconditionError("Gap: rank must be >= 1");
    if (generators_.size() != lengths_.size())
        throw PreconditionError("Gap: one length per generator required");
    if (base_.size() != static_cast<std::size_t>(s_))
        throw PreconditionError("Gap: base has wrong dimension");
    std::int64_t qv = static_cast<std::int64_t>(q_.value());
    for (std::int64_t h : lengths_)
        if (h < 2 || h > qv)
            throw PreconditionError("Gap: lengths must satisfy 2 <= H_i <= q");
    for (auto& v : base_) v = q_.reduce(v);
    for (auto& g : generators_) {
        if (g.size() != static_cast<std::size_t>(s_))
            throw PreconditionError("Gap: generator has wrong dimension");
        for (auto& v : g) v = q_.reduce(v);
    }
}

std::uint64_t Gap::volume() const {
    std::uint64_t v = 1;
    for (std::int64_t h : lengths_) v *= static_cast<std::uint64_t>(h);
    return v;
}

std::string Gap::to_json() const {
    nlohmann::json j;
    j["q"] = q_.value();
    j["s"] = s_;
    j["base"] = base_;
    j["generators"] = generators_;
    j["lengths"] = lengths_;
    return j.dump();
}

Gap Gap::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return Gap(Modulus::factorize(j.at("q").get<std::uint64_t>()),
               j.at("s").get<int>(), j.at("base").get<Vec>(),
               j.at("generators").get<std::vector<Vec>>(),
               j.at("lengths").get<std::vector<std::int64_t>>());
}

namespace {

void check_volume_guard(const Gap& g) {
    if (g.volume() > kEnumerationGuard)
        throw ResourceError("Gap enumeration guard exceeded: volume " +
                            std::to_string(g.volume()));
}

// Encodes a point of Z_q^s as a single integer; q^s fits the guard range.
std::uint64_t encode(const Vec& v, std::uint64_t q) {
    std::uint64_t code = 0;
    for (std::int64_t c : v) code = code * q + static_cast<std::uint64_t>(c);
    return code;
}

} // namespace

std::vector<Vec> enumerate_elements(const Gap& g) {
    check_volume_guard(g);
    const std::int64_t q = static_cast<std::int64_t>(g.modulus().value());
    const int r = g.rank();
    const int s = g.dimension();
    std::vector<Vec> out;
    out.reserve(g.volume());
    std::vector<std::int64_t> h(r, 0);
    // Partial sums: partial[i] = base + sum_{j<i} h_j g_j, so stepping the
    // odometer only recomputes the tail.
    std::vector<Vec> partial(r + 1, Vec(s));
    partial[0] = g.base();
    auto refresh = [&](int from) {
        for (int i = from; i < r; ++i) {
            for (int c = 0; c < s; ++c)
                partial[i + 1][c] =
                    (partial[i][c] + h[i] * g.generators()[i][c]) % q;
        }
    };
    refresh(0);
    while (true) {
        out.push_back(partial[r]);
        int i = r - 1;
        while (i >= 0) {
            if (++h[i] < g.lengths()[i]) break;
            h[i] = 0;
            --i;
        }
        if (i < 0) break;
        refresh(i);
    }
    return out;
}

std::vector<Vec> distinct_elements(const Gap& g) {
    auto all = enumerate_elements(g);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool is_proper_enumeration(const Gap& g) {
    check_volume_guard(g);
    const std::uint64_t q = g.modulus().value();
    double cells = 1.0;
    for (int i = 0; i < g.dimension(); ++i) cells *= static_cast<double>(q);
    if (cells > static_cast<double>(kEnumerationGuard))
        throw ResourceError("Gap properness guard exceeded: q^s too large");
    if (g.volume() > static_cast<std::uint64_t>(cells)) return false;  // pigeonhole
    std::vector<char> seen(static_cast<std::size_t>(cells), 0);
    for (const auto& v : enumerate_elements(g)) {
        std::uint64_t code = encode(v, q);
        if (seen[code]) return false;
        seen[code] = 1;
    }
    return true;
}

bool no_small_kernel(const Modulus& mod, const std::vector<Vec>& gens,
                     const std::vector<std::int64_t>& lengths) {
    const std::int64_t q = static_cast<std::int64_t>(mod.value());
    const int r = static_cast<int>(gens.size());
    const int s = static_cast<int>(gens.empty() ? 0 : gens[0].size());
    double box = 1.0;
    for (std::int64_t h : lengths) box *= static_cast<double>(2 * h - 1);
    if (box > static_cast<double>(kEnumerationGuard))
        throw ResourceError("kernel guard exceeded: z-box too large");
    std::vector<std::int64_t> z(r);
    for (int i = 0; i < r; ++i) z[i] = -(lengths[i] - 1);
    while (true) {
        bool zero = true;
        for (int i = 0; i < r; ++i)
            if (z[i] != 0) {
                zero = false;
                break;
            }
        if (!zero) {
            bool kernel = true;
            for (int c = 0; c < s && kernel; ++c) {
                std::int64_t acc = 0;
                for (int i = 0; i < r; ++i) acc += z[i] * gens[i][c];
                if (acc % q != 0) kernel = false;
            }
            if (kernel) return false;
        }
        int i = r - 1;
        while (i >= 0) {
            if (++z[i] < lengths[i]) break;
            z[i] = -(lengths[i] - 1);
            --i;
        }
        if (i < 0) break;
    }
    return true;
}

bool is_proper_kernel(const Gap& g) {
    return no_small_kernel(g.modulus(), g.generators(), g.lengths());
}

Gap random_proper_gap(const Modulus& q, int s, int r, std::int64_t hmin,
                      std::int64_t hmax, SplitMix64& rng) {
    std::int64_t qv = static_cast<std::int64_t>(q.value());
    if (hmin < 2 || hmax > qv || hmin > hmax)
        throw PreconditionError("random_proper_gap: length bounds outside [2, q]");
    const long kMaxRejections = 10'000;
    for (long attempt = 0; attempt < kMaxRejections; ++attempt) {
        Vec base(s);
        for (auto& v : base) v = static_cast<std::int64_t>(rng.below(q.value()));
        std::vector<Vec> gens(r, Vec(s));
        for (auto& gv : gens)
            for (auto& v : gv) v = static_cast<std::int64_t>(rng.below(q.value()));
        std::vector<std::int64_t> lengths(r);
        for (auto& h : lengths) h = rng.range(hmin, hmax);
        Gap g(q, s, std::move(base), std::move(gens), std::move(lengths));
        if (is_proper_kernel(g)) return g;
    }
    throw SamplingError("random_proper_gap: no proper GAP found", kMaxRejections);
}

Gap random_proper_gap(const Modulus& q, int s, int r, std::int64_t hmin,
                      std::int64_t hmax, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_proper_gap(q, s, r, hmin, hmax, rng);
}

} // namespace gapsums

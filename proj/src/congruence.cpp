#include "gapsums/congruence.hpp"

#include <cmath>

namespace gapsums {

namespace {

void validate(const CongruenceInstance& inst) {
    if (inst.generators.empty())
        throw PreconditionError("CongruenceInstance: rank must be >= 1");
    if (inst.intervals.size() != inst.generators.size() ||
        inst.lengths.size() != inst.generators.size())
        throw PreconditionError(
            "CongruenceInstance: generators, intervals, lengths must align");
    std::int64_t q = static_cast<std::int64_t>(inst.q.value());
    for (const auto& iv : inst.intervals)
        if (iv.len > inst.q.value())
            throw PreconditionError("CongruenceInstance: interval longer than q");
    for (std::int64_t h : inst.lengths)
        if (h < 1 || h > q)
            throw PreconditionError("CongruenceInstance: H_i outside [1, q]");
    for (const auto& g : inst.generators) {
        if (g.size() != static_cast<std::size_t>(inst.s))
            throw PreconditionError("CongruenceInstance: generator dimension");
        bool all_zero = true;
        for (std::int64_t v : g)
            if (inst.q.reduce(v) != 0) all_zero = false;
        if (all_zero)
            throw PreconditionError("CongruenceInstance: zero generator");
    }
}

} // namespace

std::uint64_t count_solutions_exact(const CongruenceInstance& inst) {
    validate(inst);
    const std::int64_t q = static_cast<std::int64_t>(inst.q.value());
    const int s = inst.s;
    const int r = inst.rank();
    double cells = std::pow(static_cast<double>(q), s);
    if (cells > static_cast<double>(kEnumerationGuard))
        throw ResourceError("count_solutions_exact: q^s guard exceeded");

    // Reduced generator rows, for the dot products.
    std::vector<Vec> gens = inst.generators;
    for (auto& g : gens)
        for (auto& v : g) v = inst.q.reduce(v);

    std::uint64_t count = 0;
    std::vector<std::int64_t> y(s, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            std::int64_t dot = 0;
            for (int c = 0; c < s; ++c) dot += gens[i][c] * y[c];
            if (!inst.intervals[i].contains(dot % q, inst.q.value())) ok = false;
        }
        if (ok) ++count;
        int c = s - 1;
        while (c >= 0) {
            if (++y[c] < q) break;
            y[c] = 0;
            --c;
        }
        if (c < 0) break;
    }
    return count;
}

std::uint64_t count_solutions_interval_loop(const CongruenceInstance& inst) {
    validate(inst);
    if (inst.rank() != 1 || inst.s != 1)
        throw PreconditionError(
            "count_solutions_interval_loop: only r = s = 1 supported");
    const std::uint64_t q = inst.q.value();
    std::uint64_t a = static_cast<std::uint64_t>(inst.q.reduce(inst.generators[0][0]));
    std::uint64_t g = gcd_u64(a, q);
    // a*y = x (mod q) has g solutions in y when g | x, none otherwise.
    std::uint64_t count = 0;
    const auto& iv = inst.intervals[0];
    for (std::uint64_t k = 0; k < iv.len; ++k) {
        std::int64_t x = inst.q.reduce(iv.lo + static_cast<std::int64_t>(k));
        if (static_cast<std::uint64_t>(x) % g == 0) count += g;
    }
    return count;
}

bool kernel_condition(const CongruenceInstance& inst) {
    return no_small_kernel(inst.q, inst.generators, inst.lengths);
}

double solution_bound(const CongruenceInstance& inst) {
    validate(inst);
    if (!kernel_condition(inst))
        throw PreconditionError(
            "solution_bound: kernel condition fails, bound hypothesis violated");
    double q = static_cast<double>(inst.q.value());
    double bound = std::pow(q, inst.s - inst.rank());
    for (int i = 0; i < inst.rank(); ++i)
        bound *= static_cast<double>(inst.intervals[i].len) +
                 q / static_cast<double>(inst.lengths[i]);
    return bound;
}

} // namespace gapsums

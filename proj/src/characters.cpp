#include "gapsums/characters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gapsums {

CharacterGroup::CharacterGroup(const Modulus& q)
    : q_(q), structure_(unit_group(q)) {
    for (const auto& c : structure_.components)
        for (std::uint64_t o : c.orders) orders_.push_back(o);

    dlog_.reserve(structure_.components.size());
    for (const auto& c : structure_.components) {
        std::vector<std::vector<std::uint64_t>> table(c.pe);
        if (c.generators.empty()) {
            // Trivial unit group (p^e in {1, 2}): every unit logs to ().
            for (std::uint64_t n = 0; n < c.pe; ++n)
                if (gcd_u64(n, c.pe) == 1) table[n] = {};
            // pe == 1: the single residue 0 is the unit 1 mod 1.
            if (c.pe == 1) table[0] = {};
        } else if (c.generators.size() == 1) {
            std::uint64_t g = c.generators[0];
            std::uint64_t x = 1 % c.pe;
            for (std::uint64_t k = 0; k < c.orders[0]; ++k) {
                table[x] = {k};
                x = mulmod_u64(x, g, c.pe);
            }
        } else {
            // 2^e, e >= 3: n = (-1)^a 5^b.
            std::uint64_t x = 1;
            for (std::uint64_t a = 0; a < 2; ++a) {
                std::uint64_t y = x;
                for (std::uint64_t b = 0; b < c.orders[1]; ++b) {
                    table[y] = {a, b};
                    y = mulmod_u64(y, 5, c.pe);
                }
                x = c.pe - 1;  // -1
            }
        }
        dlog_.push_back(std::move(table));
    }
}

std::vector<std::uint64_t> CharacterGroup::discrete_log(std::int64_t n) const {
    std::vector<std::uint64_t> out;
    for (std::size_t ci = 0; ci < structure_.components.size(); ++ci) {
        const auto& c = structure_.components[ci];
        std::uint64_t r = static_cast<std::uint64_t>(
            ((n % static_cast<std::int64_t>(c.pe)) + static_cast<std::int64_t>(c.pe)) %
            static_cast<std::int64_t>(c.pe));
        const auto& entry = dlog_[ci][r];
        if (entry.empty() && !c.generators.empty() && gcd_u64(r, c.pe) != 1)
            throw PreconditionError("discrete_log: argument is not a unit");
        for (std::uint64_t k : entry) out.push_back(k);
    }
    return out;
}

DirichletCharacter CharacterGroup::character(
    const std::vector<std::uint64_t>& exponents) const {
    if (exponents.size() != orders_.size())
        throw PreconditionError("character: exponent vector has wrong length");
    std::vector<std::uint64_t> e = exponents;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] %= orders_[i];
    return DirichletCharacter(shared_from_this(), std::move(e));
}

std::vector<DirichletCharacter> CharacterGroup::enumerate() const {
    std::vector<DirichletCharacter> out;
    out.reserve(q_.phi());
    std::vector<std::uint64_t> e(orders_.size(), 0);
    while (true) {
        out.push_back(character(e));
        // Lexicographic odometer, last index fastest.
        std::size_t i = e.size();
        while (i > 0) {
            --i;
            if (++e[i] < orders_[i]) break;
            e[i] = 0;
            if (i == 0) return out;
        }
        if (e.empty()) return out;  // trivial group: only the principal character
    }
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterGroup> g,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(g)), exponents_(std::move(exponents)) {
    conductor_ = compute_conductor();
}

cplx DirichletCharacter::operator()(std::int64_t n) const {
    const auto& comps = group_->structure_.components;
    double frac = 0.0;
    std::size_t cursor = 0;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& c = comps[ci];
        std::uint64_t r = static_cast<std::uint64_t>(
            ((n % static_cast<std::int64_t>(c.pe)) + static_cast<std::int64_t>(c.pe)) %
            static_cast<std::int64_t>(c.pe));
        if (c.pe > 1 && gcd_u64(r, c.pe) != 1) return {0.0, 0.0};
        const auto& logs = group_->dlog_[ci][r];
        for (std::size_t j = 0; j < logs.size(); ++j) {
            std::uint64_t ord = c.orders[j];
            std::uint64_t tk = mulmod_u64(exponents_[cursor + j] % ord, logs[j], ord);
            frac += static_cast<double>(tk) / static_cast<double>(ord);
        }
        cursor += c.orders.size();
    }
    double angle = 2.0 * std::numbers::pi * frac;
    return {std::cos(angle), std::sin(angle)};
}

bool DirichletCharacter::is_principal() const {
    for (std::uint64_t t : exponents_)
        if (t != 0) return false;
    return true;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<std::uint64_t> e(exponents_.size());
    const auto& orders = group_->orders_;
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = (orders[i] - exponents_[i]) % orders[i];
    return DirichletCharacter(group_, std::move(e));
}

namespace {

int valuation(std::uint64_t n, std::uint64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace

std::uint64_t DirichletCharacter::compute_conductor() const {
    const auto& comps = group_->structure_.components;
    std::uint64_t cond = 1;
    std::size_t cursor = 0;
    for (const auto& c : comps) {
        if (c.generators.empty()) continue;  // p^e in {1, 2}: conductor 1
        if (c.p != 2) {
            std::uint64_t m = c.orders[0];
            std::uint64_t t = exponents_[cursor] % m;
            if (t != 0) {
                std::uint64_t d = m / gcd_u64(t, m);  // order of the component
                int j = valuation(d, c.p) + 1;
                std::uint64_t f = 1;
                for (int i = 0; i < j; ++i) f *= c.p;
                cond *= f;
            }
            cursor += 1;
        } else if (c.e == 2) {
            if (exponents_[cursor] % 2 != 0) cond *= 4;
            cursor += 1;
        } else {
            std::uint64_t half = c.orders[1];  // 2^{e-2}
            std::uint64_t tneg = exponents_[cursor] % 2;
            std::uint64_t t5 = exponents_[cursor + 1] % half;
            if (t5 == 0) {
                if (tneg != 0) cond *= 4;
            } else {
                std::uint64_t d5 = half / gcd_u64(t5, half);
                cond *= 4 * d5;
            }
            cursor += 2;
        }
    }
    return cond;
}

std::string DirichletCharacter::to_json() const {
    std::ostringstream os;
    os << "{\"q\":" << modulus().value() << ",\"exponents\":[";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) os << ",";
        os << exponents_[i];
    }
    os << "],\"conductor\":" << conductor_ << "}";
    return os.str();
}

std::string DirichletCharacter::id() const {
    std::ostringstream os;
    os << modulus().value() << ":";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) os << ".";
        os << exponents_[i];
    }
    return os.str();
}

std::shared_ptr<const CharacterGroup> make_character_group(std::uint64_t q) {
    return std::make_shared<CharacterGroup>(Modulus::factorize(q));
}

cplx gauss_sum(const DirichletCharacter& chi) {
    std::uint64_t q = chi.modulus().value();
    RootTable roots(q);
    cplx acc{0.0, 0.0};
    for (std::uint64_t a = 0; a < q; ++a) {
        cplx v = chi(static_cast<std::int64_t>(a));
        if (v != cplx{0.0, 0.0}) acc += v * roots(static_cast<std::int64_t>(a));
    }
    return acc;
}

cplx char_fourier(const DirichletCharacter& chi, std::int64_t b) {
    std::uint64_t q = chi.modulus().value();
    RootTable roots(q);
    cplx acc{0.0, 0.0};
    for (std::uint64_t a = 0; a < q; ++a) {
        cplx v = chi(static_cast<std::int64_t>(a));
        if (v != cplx{0.0, 0.0})
            acc += v * roots(static_cast<std::int64_t>(a) * b % static_cast<std::int64_t>(q));
    }
    return acc;
}

} // namespace gapsums

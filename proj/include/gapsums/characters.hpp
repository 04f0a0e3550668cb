#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gapsums/modring.hpp"

namespace gapsums {

class DirichletCharacter;

// All characters mod q share the discrete-log tables held here. Create
// through make_character_group; characters keep their group alive.
class CharacterGroup : public std::enable_shared_from_this<CharacterGroup> {
public:
    explicit CharacterGroup(const Modulus& q);

    const Modulus& modulus() const { return q_; }
    const UnitGroupStructure& structure() const { return structure_; }

    // Orders of the chosen generators, flattened across components.
    const std::vector<std::uint64_t>& generator_orders() const { return orders_; }

    // phi(q) characters, lexicographic in exponent vectors, principal first.
    std::vector<DirichletCharacter> enumerate() const;

    DirichletCharacter character(const std::vector<std::uint64_t>& exponents) const;

    // Discrete logs of n on the flattened generator list; n must be a unit.
    std::vector<std::uint64_t> discrete_log(std::int64_t n) const;

private:
    friend class DirichletCharacter;
    Modulus q_;
    UnitGroupStructure structure_;
    std::vector<std::uint64_t> orders_;
    // Per component, per residue mod p^e: flattened generator exponents
    // (one entry for odd p / 2^2, two for 2^e with e >= 3), or empty for
    // non-units.
    std::vector<std::vector<std::vector<std::uint64_t>>> dlog_;
};

class DirichletCharacter {
public:
    const Modulus& modulus() const { return group_->modulus(); }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }

    cplx operator()(std::int64_t n) const;

    std::uint64_t conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus().value(); }
    bool is_principal() const;
    bool is_even() const { return std::abs((*this)(-1).real() - 1.0) < 1e-9; }

    DirichletCharacter conjugate() const;

    // (q, exponent vector, conductor) as a JSON object string.
    std::string to_json() const;
    // Compact id "q:e0.e1..." used in report rows.
    std::string id() const;

private:
    friend class CharacterGroup;
    DirichletCharacter(std::shared_ptr<const CharacterGroup> g,
                       std::vector<std::uint64_t> exponents);
    std::uint64_t compute_conductor() const;

    std::shared_ptr<const CharacterGroup> group_;
    std::vector<std::uint64_t> exponents_;
    std::uint64_t conductor_;
};

std::shared_ptr<const CharacterGroup> make_character_group(std::uint64_t q);

// tau(chi) = sum_{a in Z_q} chi(a) e_q(a).
cplx gauss_sum(const DirichletCharacter& chi);

// hat{chi}(b) = sum_{a in Z_q} chi(a) e_q(ab), by direct summation.
cplx char_fourier(const DirichletCharacter& chi, std::int64_t b);

} // namespace gapsums

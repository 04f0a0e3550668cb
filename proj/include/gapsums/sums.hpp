#pragma once

#include <optional>
#include <string>

#include "gapsums/characters.hpp"
#include "gapsums/fourier.hpp"
#include "gapsums/gap.hpp"

namespace gapsums {

// h(x) = c_d x^d + ... + c_1 x + c_0, coefficients as residues mod q.
class PolynomialModQ {
public:
    PolynomialModQ(Modulus q, std::vector<std::int64_t> coeffs);  // c_0 first

    const Modulus& modulus() const { return q_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    // Horner evaluation mod q.
    std::int64_t operator()(std::int64_t x) const;

    std::string to_json() const;

private:
    Modulus q_;
    std::vector<std::int64_t> coeffs_;
};

struct SumReport {
    std::string kind;       // "char", "poly", "multilinear"
    std::uint64_t q = 0;
    int s = 1;
    int r = 1;
    std::string character_id;  // or polynomial JSON for kind "poly"
    std::string gap_json;
    cplx sum{0.0, 0.0};
    double magnitude = 0.0;
    // Rigorous Lemma-4.1 chain bound ||f^||_inf * ||A^||_1 / q^s; absent when
    // the character is principal or imprimitive.
    std::optional<double> chain_bound;
    // Paper-shape bound without implied constant, for trend plots.
    double shape_bound = 0.0;
    double ratio_to_shape = 0.0;
};

// sum_{a in A} chi(a) over the element set of G (s = 1).
SumReport character_sum_over_gap(const DirichletCharacter& chi, const Gap& g);

// sum_{n in A} e_q(h(n)) over the element set of G (s = 1, q prime,
// 2 <= d < q, q not dividing c_d). The chain bound uses the exactly
// computed ||f^||_inf over all b; pass cached_linf to reuse it across GAPs.
SumReport poly_exp_sum_over_gap(const PolynomialModQ& h, const Gap& g,
                                std::optional<double> cached_linf = std::nullopt);

// sum over A in Z_q^s of chi(a_1 ... a_s).
SumReport multilinear_character_sum(const DirichletCharacter& chi, const Gap& g);

// f_inf * l1_norm(G) / q^s.
double completion_bound(double f_inf, const Gap& g);

struct WeilCheck {
    double max_complete_sum = 0.0;  // max_b |sum_a e_q(h(a) + ba)|
    double ceiling = 0.0;           // (d - 1) sqrt(q)
    bool within_bound = false;
};

// Exact maximum over all q additive twists; q prime <= 1e4.
WeilCheck weil_complete_sum_check(const PolynomialModQ& h);

// ||f^||_inf for f(n) = e_q(h(n)), by complete-sum enumeration over all b.
double poly_fourier_linf(const PolynomialModQ& h);

} // namespace gapsums

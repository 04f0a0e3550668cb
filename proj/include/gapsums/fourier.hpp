#pragma once

#include "gapsums/gap.hpp"
#include "gapsums/modring.hpp"

namespace gapsums {

// hat{A}(b) = sum_{a in A(multiset)} e_q(a . b), via the closed form
// e_q(base . b) * prod_i geometric_sum(q, g_i . b, H_i). For proper GAPs this
// equals the sum over the element set.
cplx gap_fourier_coefficient(const Gap& g, const Vec& b);

// Oracle route: direct sum over enumerated elements (multiset semantics).
cplx gap_fourier_coefficient_direct(const Gap& g, const Vec& b);

// sum over all b in Z_q^s of |hat{A}(b)|; guard q^s <= 1e7.
double l1_norm(const Gap& g);

// q^s * prod ln(H_i); requires a proper GAP (kernel check).
double l1_bound(const Gap& g);

struct FourierProfile {
    double l1 = 0.0;
    double linf = 0.0;
    double l2_squared = 0.0;        // sum |hat{A}(b)|^2
    double parseval_expected = 0.0; // q^s * volume; Parseval target for proper GAPs
    double parseval_relative_error() const {
        return std::abs(l2_squared - parseval_expected) / parseval_expected;
    }
};

// One pass over all frequencies; same guard as l1_norm.
FourierProfile fourier_profile(const Gap& g);

} // namespace gapsums

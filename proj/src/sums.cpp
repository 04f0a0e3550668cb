#include "gapsums/sums.hpp"

#include <cmath>
#include <sstream>

namespace gapsums {

PolynomialModQ::PolynomialModQ(Modulus q, std::vector<std::int64_t> coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw PreconditionError("PolynomialModQ: empty coefficient list");
    for (auto& c : coeffs_) c = q_.reduce(c);
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t PolynomialModQ::operator()(std::int64_t x) const {
    const std::int64_t q = static_cast<std::int64_t>(q_.value());
    std::int64_t xr = q_.reduce(x);
    std::int64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = (acc * xr + coeffs_[i]) % q;
    return acc;
}

std::string PolynomialModQ::to_json() const {
    std::ostringstream os;
    os << "{\"q\":" << q_.value() << ",\"coeffs\":[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i];
    }
    os << "]}";
    return os.str();
}

double completion_bound(double f_inf, const Gap& g) {
    if (f_inf < 0)
        throw PreconditionError("completion_bound: f_inf must be nonnegative");
    double qs = std::pow(static_cast<double>(g.modulus().value()),
                         g.dimension());
    return f_inf * l1_norm(g) / qs;
}

namespace {

void require_same_modulus(std::uint64_t a, std::uint64_t b) {
    if (a != b) throw PreconditionError("modulus mismatch");
}

double shape_log_factor(std::uint64_t q, int r) {
    return std::pow(std::log(static_cast<double>(q)), r);
}

} // namespace

SumReport character_sum_over_gap(const DirichletCharacter& chi, const Gap& g) {
    require_same_modulus(chi.modulus().value(), g.modulus().value());
    if (g.dimension() != 1)
        throw PreconditionError("character_sum_over_gap: needs s = 1");
    const double q = static_cast<double>(g.modulus().value());
    SumReport rep;
    rep.kind = "char";
    rep.q = g.modulus().value();
    rep.s = 1;
    rep.r = g.rank();
    rep.character_id = chi.id();
    rep.gap_json = g.to_json();
    for (const auto& a : distinct_elements(g)) rep.sum += chi(a[0]);
    rep.magnitude = std::abs(rep.sum);
    rep.shape_bound = std::sqrt(q) * shape_log_factor(rep.q, rep.r);
    rep.ratio_to_shape = rep.magnitude / rep.shape_bound;
    if (chi.is_primitive())
        rep.chain_bound = completion_bound(std::sqrt(q), g);
    return rep;
}

SumReport poly_exp_sum_over_gap(const PolynomialModQ& h, const Gap& g,
                                std::optional<double> cached_linf) {
    require_same_modulus(h.modulus().value(), g.modulus().value());
    if (g.dimension() != 1)
        throw PreconditionError("poly_exp_sum_over_gap: needs s = 1");
    if (!h.modulus().is_prime())
        throw PreconditionError("poly_exp_sum_over_gap: q must be prime");
    const int d = h.degree();
    if (d < 2 || static_cast<std::uint64_t>(d) >= h.modulus().value())
        throw PreconditionError("poly_exp_sum_over_gap: need 2 <= d < q");
    const std::uint64_t qv = g.modulus().value();
    const double q = static_cast<double>(qv);
    SumReport rep;
    rep.kind = "poly";
    rep.q = qv;
    rep.s = 1;
    rep.r = g.rank();
    rep.character_id = h.to_json();
    rep.gap_json = g.to_json();
    RootTable roots(qv);
    for (const auto& a : distinct_elements(g)) rep.sum += roots(h(a[0]));
    rep.magnitude = std::abs(rep.sum);
    rep.shape_bound = d * std::sqrt(q) * shape_log_factor(qv, rep.r);
    rep.ratio_to_shape = rep.magnitude / rep.shape_bound;
    rep.chain_bound = completion_bound(
        cached_linf ? *cached_linf : poly_fourier_linf(h), g);
    return rep;
}

SumReport multilinear_character_sum(const DirichletCharacter& chi, const Gap& g) {
    require_same_modulus(chi.modulus().value(), g.modulus().value());
    const int s = g.dimension();
    const std::int64_t q = static_cast<std::int64_t>(g.modulus().value());
    SumReport rep;
    rep.kind = "multilinear";
    rep.q = g.modulus().value();
    rep.s = s;
    rep.r = g.rank();
    rep.character_id = chi.id();
    rep.gap_json = g.to_json();
    for (const auto& a : distinct_elements(g)) {
        std::int64_t prod = 1;
        for (int c = 0; c < s; ++c) prod = prod * a[c] % q;
        rep.sum += chi(prod);
    }
    rep.magnitude = std::abs(rep.sum);
    double qd = static_cast<double>(q);
    rep.shape_bound = std::pow(qd, s / 2.0) * shape_log_factor(rep.q, rep.r);
    rep.ratio_to_shape = rep.magnitude / rep.shape_bound;
    if (chi.is_primitive())
        rep.chain_bound = completion_bound(std::pow(qd, s / 2.0), g);
    return rep;
}

double poly_fourier_linf(const PolynomialModQ& h) {
    return weil_complete_sum_check(h).max_complete_sum;
}

WeilCheck weil_complete_sum_check(const PolynomialModQ& h) {
    const Modulus& mod = h.modulus();
    if (!mod.is_prime())
        throw PreconditionError("weil_complete_sum_check: q must be prime");
    const std::uint64_t q = mod.value();
    if (q > 10'000)
        throw ResourceError("weil_complete_sum_check: q guard (<= 1e4) exceeded");
    const int d = h.degree();
    if (d < 1 || static_cast<std::uint64_t>(d) >= q || h.coefficients().back() == 0)
        throw PreconditionError("weil_complete_sum_check: need 1 <= d < q, q not | c_d");
    RootTable roots(q);
    std::vector<std::int64_t> hv(q);
    for (std::uint64_t a = 0; a < q; ++a) hv[a] = h(static_cast<std::int64_t>(a));
    WeilCheck out;
    for (std::uint64_t b = 0; b < q; ++b) {
        cplx acc{0.0, 0.0};
        for (std::uint64_t a = 0; a < q; ++a)
            acc += roots(hv[a] + static_cast<std::int64_t>(b * a));
        double mag = std::abs(acc);
        if (mag > out.max_complete_sum) out.max_complete_sum = mag;
    }
    out.ceiling = (d - 1) * std::sqrt(static_cast<double>(q));
    out.within_bound = out.max_complete_sum <= out.ceiling + 1e-6;
    return out;
}

} // namespace gapsums

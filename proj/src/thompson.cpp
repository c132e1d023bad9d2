#include "su11/thompson.hpp"

#include <cmath>

namespace su11 {

SampleSpec::SampleSpec(double lambda_, std::uint64_t seed_, double boost_range_)
    : lambda(lambda_), seed(seed_), boost_range(boost_range_) {
    if (!(lambda > 0.0)) throw std::invalid_argument("SampleSpec: lambda must be positive");
    if (!(boost_range >= 0.0)) throw std::invalid_argument("SampleSpec: boost_range must be >= 0");
}

ANPoint sample_admissible_an(const SampleSpec& spec) {
    Rng rng(spec.seed);
    const double alpha = rng.angle();
    const double beta = rng.angle();
    const double r = rng.uniform(0.0, spec.boost_range);
    return dress(spec.lambda, GElement::boost(r, alpha, beta)).b_prime;
}

double thompson_defect(const ANPoint& b1, const ANPoint& b2) {
    const double g1 = adm_spectrum_an(b1);
    const double g2 = adm_spectrum_an(b2);
    const Mat2C product = to_matrix(b1) * to_matrix(b2);
    return adm_spectrum_slc(product) - g1 - g2;
}

double linear_defect(const QStarPoint& m1, const QStarPoint& m2) {
    if (!m1.admissible() || !m2.admissible())
        throw domain_error("linear_defect: inputs must be admissible");
    const QStarPoint sum{m1.x + m2.x, m1.y + m2.y, m1.z + m2.z};
    return sum.lambda() - m1.lambda() - m2.lambda();
}

bool product_admissible(const ANPoint& b1, const ANPoint& b2) {
    // Admissibility of the inputs is a precondition, not part of the answer.
    adm_spectrum_an(b1);
    adm_spectrum_an(b2);
    const Mat2C product = to_matrix(b1) * to_matrix(b2);
    try {
        adm_spectrum_slc(product);
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

} // namespace su11

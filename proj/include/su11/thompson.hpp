#pragma once

#include "su11/maps.hpp"
#include "su11/rng.hpp"

namespace su11 {

/// Parameters of one admissible-AN draw: the target admissible spectrum,
/// the stream seed, and the rapidity range of the dressing group element.
struct SampleSpec {
    double lambda = 1.0;
    std::uint64_t seed = 0;
    double boost_range = 1.0;

    SampleSpec(double lambda_, std::uint64_t seed_, double boost_range_);
};

/// Admissible AN element with admissible spectrum spec.lambda, obtained by
/// dressing the diagonal element with a seeded random g (angles uniform in
/// [0, 2pi), rapidity uniform in [0, boost_range]).
ANPoint sample_admissible_an(const SampleSpec& spec);

/// gamma(b1 b2) - gamma(b1) - gamma(b2); the multiplicative inequality
/// asserts this is >= 0. Throws if an input, or the product, is not
/// admissible (a non-admissible product is a closure failure).
double thompson_defect(const ANPoint& b1, const ANPoint& b2);

/// lambda(M1 + M2) - lambda(M1) - lambda(M2) for admissible points of q*;
/// the reversed triangle inequality asserts this is >= 0.
double linear_defect(const QStarPoint& m1, const QStarPoint& m2);

/// Whether b1 b2 is admissible in SL(2,C); inputs must be admissible.
bool product_admissible(const ANPoint& b1, const ANPoint& b2);

} // namespace su11

#pragma once

// Seeded random inputs for property tests.

#include "curveh/polynomial.hpp"
#include "curveh/random.hpp"

namespace testgen {

/// Form of degree d with about `density` of its monomials filled by
/// coefficients in [-box, box] (possibly fractional).
inline curveh::Poly random_form(curveh::Sampler& rng, int d, int box = 5, bool fractions = false, int density = 100)
{
    curveh::Poly f(curveh::RationalField{}, d);
    for (std::size_t i = 0; i < curveh::monomial_count(d); ++i) {
        if (rng.uniform(1, 100) > density) continue;
        mpq_class c(rng.uniform(-box, box));
        if (fractions) c /= mpq_class(rng.uniform(1, 4));
        f.add_term(curveh::monomial_at(d, i), c);
    }
    return f;
}

inline curveh::Poly nonzero_form(curveh::Sampler& rng, int d, int box = 5, bool fractions = false)
{
    for (;;) {
        curveh::Poly f = random_form(rng, d, box, fractions);
        if (!f.is_zero()) return f;
    }
}

}  // namespace testgen

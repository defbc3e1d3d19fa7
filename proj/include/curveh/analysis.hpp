#pragma once

// Field-agnostic analysis of a rational curve: runs the Jacobian engine in the
// requested arithmetic and returns plain integers and rendered forms.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curveh/engine.hpp"
#include "curveh/polynomial.hpp"

namespace curveh {

enum class Arithmetic {
    Rational,    // exact over QQ
    SinglePrime, // one prime, advisory
    TwoPrimes,   // two independent primes that must agree on every integer
};

std::string to_string(Arithmetic a);

struct AnalysisOptions {
    int kmax = -1;  // -1: 2d - 2
    Arithmetic arithmetic = Arithmetic::TwoPrimes;
    bool saturation = true;
    std::uint32_t prime = PrimeField::kDefaultPrime;
    std::uint32_t second_prime = PrimeField::kVerifyPrime;
};

struct GeneratorRecord {
    int degree = 0;
    std::array<std::string, 3> components;
};

struct Analysis {
    std::string polynomial;  // rendered input
    int d = 0;
    Arithmetic arithmetic = Arithmetic::TwoPrimes;
    std::vector<std::uint32_t> primes;
    int kmax = 0;

    MilnorProfile milnor;

    int m = 0;
    std::vector<int> exponents;
    std::vector<int> relation_degrees;
    std::vector<int> shifts;
    bool certified = false;

    std::vector<GeneratorRecord> generators;
    /// True when every generator is a verified syzygy over QQ.
    bool generators_exact = false;

    std::optional<JacobianModuleProfile> module;
};

/// Throws NonReducedError, InternalError (including prime disagreement),
/// std::domain_error when no usable prime is found.
Analysis analyze(const Poly& f, const AnalysisOptions& options = {});

/// Throws UncertifiedError unless the Hilbert-series certificate holds.
void require_certified(const Analysis& a);

/// Rational number with |num|, den <= sqrt(modulus / 2) congruent to the
/// residue, if one exists.
std::optional<mpq_class> rational_reconstruction(const mpz_class& residue, const mpz_class& modulus);

}  // namespace curveh

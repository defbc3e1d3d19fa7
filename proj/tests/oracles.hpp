#pragma once

// Brute-force reference computations that share no code with the engine:
// dense mod-p elimination over explicit monomial lists.

#include <array>
#include <cstdint>
#include <vector>

#include "curveh/polynomial.hpp"

namespace oracle {

inline constexpr std::uint64_t kPrime = 1000003;

using Row = std::vector<std::uint64_t>;

std::uint64_t reduce(const mpq_class& q);

/// Exponent triples of degree k in any fixed order.
std::vector<std::array<int, 3>> monomials(int k);

/// Rank of a dense matrix mod kPrime.
std::size_t rank(std::vector<Row> rows, std::size_t cols);

/// dim (S / J_f)_k.
long hilbert(const curveh::Poly& f, int k);

/// dim of the space of (a, b, c) in S_k^3 with a f_x + b f_y + c f_z = 0.
long syzygies(const curveh::Poly& f, int k);

/// dim (J_f : m^N)_k - dim (J_f)_k with N chosen past the symmetry centre.
long module_dim(const curveh::Poly& f, int k);

/// a f_x + b f_y + c f_z over QQ.
curveh::Poly jacobian_pairing(const curveh::Poly& f, const std::array<curveh::Poly, 3>& abc);

}  // namespace oracle

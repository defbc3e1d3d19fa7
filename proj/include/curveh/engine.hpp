#pragma once

// Jacobian syzygies, the Milnor algebra and the Jacobian module of a plane
// curve f = 0.
//
// The engine builds M(f) = S/J_f degree by degree: M_s = S_s below d-1, the
// quotient of S_{d-1} by the partials in degree d-1, and from degree d on the
// cokernel of the Koszul map into S_1 (x) M_{s-1}. Every graded invariant is
// read off this tower:
//   * generator counts of D_0(f) from Tor_2(M, k), relation degrees from
//     Tor_3(M, k) = socle of M shifted by 3;
//   * N(f) = H^0_m(M) by a descending pass A_s = {u : x_i u in A_{s+1}}.
// Generator representatives come from explicit kernels of the Jacobian map
// in the degrees where generators occur.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curveh/linalg.hpp"
#include "curveh/polynomial.hpp"

namespace curveh {

/// Hilbert function grows on the stabilization window: f has a repeated
/// factor.
class NonReducedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Hilbert-series certificate failed within the generator scan bound.
class UncertifiedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural identity that must hold for every reduced curve was violated,
/// or two primes disagreed on a reported invariant.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// C(n, 2), zero when n < 2.
constexpr long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

struct MilnorProfile {
    int d = 0;
    std::vector<long> hf;  // hf[k] = dim M(f)_k for 0 <= k <= K_hf
    long tau = 0;
    int stabilization_degree = 0;
};

struct JacobianModuleProfile {
    int T = 0;             // 3(d - 2)
    std::vector<long> n;   // n[k] = dim N(f)_k for 0 <= k <= T
    long nu = 0;
    std::optional<int> sigma;  // empty when N(f) = 0
};

template <class Field>
struct SyzygyTriple {
    int degree = 0;
    std::array<Form<Field>, 3> components;
};

template <class Field>
struct ResolutionSummary {
    int m = 0;
    std::vector<int> exponents;
    std::vector<SyzygyTriple<Field>> generators;
    std::vector<int> relation_degrees;  // c_j
    std::vector<int> shifts;            // epsilon_j
    bool certified = false;
};

/// Hilbert-series certificate: the resolution shape predicts hf(k) for all
/// k in [0, hf.size()).
bool hilbert_certificate(int d, const std::vector<long>& hf, const std::vector<int>& exponents,
                         const std::vector<int>& relation_degrees);

/// Value of hf(k) predicted by the resolution shape.
long predicted_hilbert_value(int d, int k, const std::vector<int>& exponents, const std::vector<int>& relation_degrees);

/// nu(C) from d, mdr(f) and tau(C); throws std::invalid_argument when the
/// result would be negative.
long nu_from_tjurina(int d, int d1, long tau);

struct EngineOptions {
    int kmax = -1;  // generator scan bound; -1 means 2d - 2
    bool saturation = true;
};

template <class Field>
class JacobianEngine {
public:
    using Element = typename Field::Element;

    /// Builds the Milnor tower and the resolution. Throws NonReducedError.
    JacobianEngine(Form<Field> f, EngineOptions options = {});

    const Form<Field>& curve() const { return f_; }
    const Field& field() const { return f_.field(); }
    int degree() const { return d_; }
    int kmax() const { return kmax_; }
    int top_degree() const { return top_; }

    const MilnorProfile& milnor_profile() const { return milnor_; }
    const ResolutionSummary<Field>& resolution_summary() const { return resolution_; }
    /// Empty when saturation was disabled.
    const std::optional<JacobianModuleProfile>& jacobian_module_profile() const { return module_; }

    /// D_0(f)_k as the kernel of S_k^3 -> S_{k+d-1}; coordinates are
    /// (component, monomial) with components outermost.
    SubspaceBasis<Field> syzygy_space(int k) const;

    /// dim (I_f)_k; needs the saturation pass.
    long saturate_jacobian(int k) const;

    /// Number of minimal generators of D_0(f) in each degree 0..kmax.
    const std::vector<long>& generator_counts() const { return generator_counts_; }
    /// Number of minimal relations in each resolution degree c (index c).
    const std::vector<long>& relation_counts() const { return relation_counts_; }
    /// dim of the socle of M(f) in each degree.
    const std::vector<long>& socle_dims() const { return socle_; }

    /// Generator vectors as found by the scan (S_k^3 coordinates).
    const std::vector<Vec<Field>>& generator_vectors() const { return generator_vectors_; }

    /// Multiplication by x, y or z from M_{s-1} to M_s, in the tower basis.
    const ExactMatrix<Field>& multiplication(int s, int var) const { return mult_.at(s).at(var); }
    long milnor_dim(int s) const { return s < 0 ? 0 : dims_.at(s); }

private:
    void build_tower();
    void build_milnor_profile();
    void compute_socle();
    void compute_generators();
    void compute_relations();
    void certify();
    void compute_saturation();
    std::vector<long> saturation_pass(int start) const;

    ExactMatrix<Field> jacobian_map(int k) const;

    Form<Field> f_;
    std::array<Form<Field>, 3> partials_;
    int d_;
    int kmax_;
    int top_;
    bool saturation_;

    std::vector<long> dims_;
    std::vector<std::vector<ExactMatrix<Field>>> mult_;  // mult_[s][i] : M_{s-1} -> M_s, s >= 1
    std::vector<long> socle_;
    std::vector<long> generator_counts_;
    std::vector<long> relation_counts_;
    std::vector<Vec<Field>> generator_vectors_;

    MilnorProfile milnor_;
    ResolutionSummary<Field> resolution_;
    std::optional<JacobianModuleProfile> module_;
};

extern template class JacobianEngine<RationalField>;
extern template class JacobianEngine<PrimeField>;

/// Builds the three components of an S_k^3 coordinate vector.
template <class Field>
std::array<Form<Field>, 3> triple_from_vector(const Field& field, int k, const Vec<Field>& v)
{
    std::size_t n = monomial_count(k);
    std::array<Form<Field>, 3> out{Form<Field>(field, k), Form<Field>(field, k), Form<Field>(field, k)};
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!field.is_zero(v[c * n + i])) out[c].add_term(monomial_at(k, i), v[c * n + i]);
        }
    }
    return out;
}

}  // namespace curveh

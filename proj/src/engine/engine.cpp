#include "curveh/engine.hpp"

#include <algorithm>
#include <numeric>

namespace curveh {

long predicted_hilbert_value(int d, int k, const std::vector<int>& exponents, const std::vector<int>& relation_degrees)
{
    long v = choose2(k + 2) - 3 * choose2(k - d + 3);
    for (int dj : exponents) v += choose2(k - d - dj + 3);
    for (int c : relation_degrees) v -= choose2(k - c + 2);
    return v;
}

bool hilbert_certificate(int d, const std::vector<long>& hf, const std::vector<int>& exponents,
                         const std::vector<int>& relation_degrees)
{
    for (std::size_t k = 0; k < hf.size(); ++k) {
        if (predicted_hilbert_value(d, static_cast<int>(k), exponents, relation_degrees) != hf[k]) return false;
    }
    return true;
}

long nu_from_tjurina(int d, int d1, long tau)
{
    if (d < 1 || d1 < 0) throw std::invalid_argument("nu_from_tjurina: need d >= 1 and d1 >= 0");
    long e = d - 1;
    long value;
    if (2L * d1 < e) {
        value = e * e - long(d1) * (e - d1) - tau;
    } else {
        long q = 3 * e * e;
        value = (q + 3) / 4 - tau;
    }
    if (value < 0) throw std::invalid_argument("nu_from_tjurina: inconsistent inputs give a negative value");
    return value;
}

namespace {

template <class Field>
ExactMatrix<Field> matmul(const ExactMatrix<Field>& a, const ExactMatrix<Field>& b)
{
    const Field& F = a.field();
    ExactMatrix<Field> c(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (F.is_zero(aik)) continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!F.is_zero(brow[j])) out[j] = F.add(out[j], F.mul(aik, brow[j]));
            }
        }
    }
    return c;
}

template <class Field>
ExactMatrix<Field> stack(const Field& F, const std::vector<ExactMatrix<Field>>& blocks, std::size_t cols)
{
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    ExactMatrix<Field> out(F, rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) std::copy(b.row(r).begin(), b.row(r).end(), out.row(r0 + r).begin());
        r0 += b.rows();
    }
    return out;
}

/// Index in S_k of (monomial a of S_{k-1}) times x_var.
std::vector<std::size_t> shift_table(int k_minus_1, int var)
{
    std::size_t n = monomial_count(k_minus_1);
    std::vector<std::size_t> t(n);
    for (std::size_t a = 0; a < n; ++a) t[a] = monomial_index(monomial_at(k_minus_1, a).times_var(var));
    return t;
}

/// x_var * v for v in a direct sum of graded pieces; blocks[b] is the degree
/// of block b before the shift.
template <class Field>
Vec<Field> shift_blocks(const Field& F, const Vec<Field>& v, const std::vector<int>& block_degrees, int var)
{
    std::size_t out_len = 0;
    for (int deg : block_degrees) out_len += monomial_count(deg + 1);
    Vec<Field> w(out_len, F.zero());
    std::size_t in0 = 0, out0 = 0;
    for (int deg : block_degrees) {
        std::size_t n = monomial_count(deg);
        if (n > 0) {
            std::vector<std::size_t> t = shift_table(deg, var);
            for (std::size_t a = 0; a < n; ++a) {
                if (!F.is_zero(v[in0 + a])) w[out0 + t[a]] = v[in0 + a];
            }
        }
        in0 += n;
        out0 += monomial_count(deg + 1);
    }
    return w;
}

}  // namespace

template <class Field>
JacobianEngine<Field>::JacobianEngine(Form<Field> f, EngineOptions options)
    : f_(std::move(f)), partials_(partial_derivatives(f_)), d_(f_.degree()), saturation_(options.saturation)
{
    kmax_ = options.kmax >= 0 ? options.kmax : 2 * d_ - 2;
    top_ = std::max({3 * (d_ - 2) + 3, kmax_ + d_ - 1, d_ + 2});
    build_tower();
    build_milnor_profile();
    compute_socle();
    compute_generators();
    certify();
    compute_relations();
    if (saturation_) compute_saturation();
}

template <class Field>
void JacobianEngine<Field>::build_tower()
{
    const Field& F = field();
    dims_.assign(top_ + 1, 0);
    mult_.resize(top_ + 1);
    for (int s = 0; s <= top_; ++s) {
        if (s < d_ - 1) {
            dims_[s] = static_cast<long>(monomial_count(s));
            if (s == 0) continue;
            for (int i = 0; i < 3; ++i) {
                ExactMatrix<Field> m(F, monomial_count(s), monomial_count(s - 1));
                std::vector<std::size_t> t = shift_table(s - 1, i);
                for (std::size_t a = 0; a < t.size(); ++a) m(t[a], a) = F.one();
                mult_[s].push_back(std::move(m));
            }
        } else if (s == d_ - 1) {
            std::vector<Vec<Field>> gens;
            for (const auto& p : partials_) gens.push_back(p.coefficients());
            SubspaceBasis<Field> w = row_space<Field>(F, gens, monomial_count(s));
            ExactMatrix<Field> proj = quotient_projection(w);
            dims_[s] = static_cast<long>(proj.rows());
            if (s == 0) continue;
            for (int i = 0; i < 3; ++i) {
                std::vector<std::size_t> t = shift_table(s - 1, i);
                ExactMatrix<Field> m(F, proj.rows(), t.size());
                for (std::size_t a = 0; a < t.size(); ++a) {
                    for (std::size_t r = 0; r < proj.rows(); ++r) m(r, a) = proj(r, t[a]);
                }
                mult_[s].push_back(std::move(m));
            }
        } else {
            const std::size_t h1 = static_cast<std::size_t>(dims_[s - 1]);
            const std::size_t h2 = s >= 2 ? static_cast<std::size_t>(dims_[s - 2]) : 0;
            const std::size_t ambient = 3 * h1;
            ExactMatrix<Field> rel(F, (h2 > 0 && s >= 2) ? 3 * h2 : 0, ambient);
            if (rel.rows() > 0) {
                const auto& mu = mult_[s - 1];
                std::size_t r = 0;
                static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
                for (std::size_t b = 0; b < h2; ++b) {
                    for (const auto& pr : kPairs) {
                        int i = pr[0], j = pr[1];
                        auto row = rel.row(r++);
                        for (std::size_t a = 0; a < h1; ++a) {
                            row[i * h1 + a] = mu[j](a, b);
                            row[j * h1 + a] = F.neg(mu[i](a, b));
                        }
                    }
                }
            }
            std::vector<std::size_t> piv = rref(rel);
            SubspaceBasis<Field> w(F, ambient);
            for (std::size_t r = 0; r < piv.size(); ++r) w.insert(rel.row(r));
            ExactMatrix<Field> proj = quotient_projection(w);
            dims_[s] = static_cast<long>(proj.rows());
            for (int i = 0; i < 3; ++i) {
                ExactMatrix<Field> m(F, proj.rows(), h1);
                for (std::size_t r = 0; r < proj.rows(); ++r) {
                    for (std::size_t a = 0; a < h1; ++a) m(r, a) = proj(r, i * h1 + a);
                }
                mult_[s].push_back(std::move(m));
            }
        }
    }
}

template <class Field>
void JacobianEngine<Field>::build_milnor_profile()
{
    const int T = 3 * (d_ - 2);
    const int khf = std::max(T + 3, 0);
    milnor_.d = d_;
    milnor_.hf.assign(dims_.begin(), dims_.begin() + khf + 1);
    if (d_ >= 2) {
        long a = dims_[T + 1], b = dims_[T + 2], c = dims_[T + 3];
        if (a != b || b != c) {
            throw NonReducedError("non-reduced or singular-locus not finite: Hilbert function of the Milnor algebra is " +
                                  std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
                                  " in degrees " + std::to_string(T + 1) + ".." + std::to_string(T + 3));
        }
    }
    milnor_.tau = milnor_.hf.back();
    int s = khf;
    while (s > 0 && milnor_.hf[s - 1] == milnor_.tau) --s;
    milnor_.stabilization_degree = s;
}

template <class Field>
void JacobianEngine<Field>::compute_socle()
{
    socle_.assign(top_ + 1, 0);
    for (int s = 0; s < top_; ++s) {
        if (dims_[s] == 0) continue;
        ExactMatrix<Field> m = stack(field(), mult_[s + 1], static_cast<std::size_t>(dims_[s]));
        socle_[s] = dims_[s] - static_cast<long>(rank(std::move(m)));
    }
}

template <class Field>
ExactMatrix<Field> JacobianEngine<Field>::jacobian_map(int k) const
{
    const Field& F = field();
    const std::size_t n = monomial_count(k);
    ExactMatrix<Field> m(F, monomial_count(k + d_ - 1), 3 * n);
    for (int c = 0; c < 3; ++c) {
        for (std::size_t a = 0; a < n; ++a) {
            Monomial mono = monomial_at(k, a);
            for (const auto& [mt, coef] : partials_[c].terms()) {
                std::size_t r = monomial_index(mt.times(mono));
                m(r, c * n + a) = F.add(m(r, c * n + a), coef);
            }
        }
    }
    return m;
}

template <class Field>
SubspaceBasis<Field> JacobianEngine<Field>::syzygy_space(int k) const
{
    if (k < 0) return SubspaceBasis<Field>(field(), 0);
    return kernel_basis(jacobian_map(k));
}

template <class Field>
void JacobianEngine<Field>::compute_generators()
{
    const Field& F = field();
    auto h = [&](int s) { return s < 0 ? 0L : dims_[s]; };
    auto soc = [&](int s) { return s < 0 ? 0L : socle_[s]; };

    generator_counts_.assign(kmax_ + 1, 0);
    {
        std::vector<Vec<Field>> gens;
        for (const auto& p : partials_) gens.push_back(p.coefficients());
        generator_counts_[0] = 3 - static_cast<long>(span_dim<Field>(F, gens, monomial_count(d_ - 1)));
    }
    for (int k = 1; k <= kmax_; ++k) {
        int s = k + d_ - 1;
        long b2 = h(s) - 3 * h(s - 1) + 3 * h(s - 2) - h(s - 3) + soc(s - 3);
        if (b2 < 0) throw InternalError("negative Koszul homology dimension in degree " + std::to_string(s));
        generator_counts_[k] = b2;
    }

    std::optional<SubspaceBasis<Field>> previous;
    int previous_k = -2;
    for (int k = 0; k <= kmax_; ++k) {
        if (generator_counts_[k] == 0) continue;
        SubspaceBasis<Field> dk = syzygy_space(k);
        SubspaceBasis<Field> dprev = previous_k == k - 1 ? *previous : syzygy_space(k - 1);
        std::vector<Vec<Field>> products;
        if (k >= 1) {
            for (const auto& v : dprev.vectors()) {
                for (int var = 0; var < 3; ++var) products.push_back(shift_blocks(F, v, {k - 1, k - 1, k - 1}, var));
            }
        }
        SubspaceBasis<Field> lower = row_space<Field>(F, products, 3 * monomial_count(k));
        std::vector<Vec<Field>> residuals;
        for (const auto& v : dk.vectors()) residuals.push_back(lower.residual(v));
        SubspaceBasis<Field> fresh = row_space<Field>(F, residuals, 3 * monomial_count(k));
        if (static_cast<long>(fresh.dim()) != generator_counts_[k]) {
            throw InternalError("direct generator count " + std::to_string(fresh.dim()) + " in degree " + std::to_string(k) +
                                " disagrees with the Koszul count " + std::to_string(generator_counts_[k]));
        }
        for (const auto& v : fresh.vectors()) {
            generator_vectors_.push_back(v);
            resolution_.exponents.push_back(k);
            resolution_.generators.push_back(SyzygyTriple<Field>{k, triple_from_vector(F, k, v)});
        }
        previous = std::move(dk);
        previous_k = k;
    }
    resolution_.m = static_cast<int>(resolution_.exponents.size());

    relation_counts_.assign(top_ + 3, 0);
    for (int s = 0; s < top_; ++s) relation_counts_[s + 3] = socle_[s];
}

template <class Field>
void JacobianEngine<Field>::certify()
{
    std::vector<int> rel;
    for (std::size_t c = 0; c < relation_counts_.size(); ++c) {
        for (long i = 0; i < relation_counts_[c]; ++i) rel.push_back(static_cast<int>(c));
    }
    resolution_.relation_degrees = rel;
    resolution_.certified = hilbert_certificate(d_, milnor_.hf, resolution_.exponents, rel);
}

template <class Field>
void JacobianEngine<Field>::compute_relations()
{
    const Field& F = field();
    const auto& ex = resolution_.exponents;
    const int m = resolution_.m;
    if (!resolution_.certified) return;
    if (m < 2) throw InternalError("fewer than two syzygy generators on a certified run");
    const int t = ex[0] + ex[1] + 1 - d_;

    // Explicit scan of the relation module: kernels of (+)S_{rho - d_j} -> S_rho^3.
    std::vector<int> found;
    const int want = static_cast<int>(resolution_.relation_degrees.size());
    if (want > 0) {
        std::optional<SubspaceBasis<Field>> prev_kernel;
        std::vector<int> prev_blocks;
        const int cap = ex.back() + std::max(t, 1);
        for (int rho = ex.front(); rho <= cap && static_cast<int>(found.size()) < want; ++rho) {
            const std::size_t n = monomial_count(rho);
            std::vector<int> blocks;
            std::size_t cols = 0;
            for (int dj : ex) {
                blocks.push_back(rho - dj);
                cols += monomial_count(rho - dj);
            }
            ExactMatrix<Field> map(F, 3 * n, cols);
            std::size_t col0 = 0;
            for (int j = 0; j < m; ++j) {
                int deg = rho - ex[j];
                std::size_t nb = monomial_count(deg);
                for (std::size_t a = 0; a < nb; ++a) {
                    Monomial mono = monomial_at(deg, a);
                    for (int c = 0; c < 3; ++c) {
                        for (const auto& [mt, coef] : resolution_.generators[j].components[c].terms()) {
                            map(c * n + monomial_index(mt.times(mono)), col0 + a) = coef;
                        }
                    }
                }
                col0 += nb;
            }
            SubspaceBasis<Field> kernel = kernel_basis(std::move(map));
            std::size_t lower = 0;
            if (prev_kernel && prev_kernel->dim() > 0) {
                std::vector<Vec<Field>> products;
                for (const auto& v : prev_kernel->vectors()) {
                    for (int var = 0; var < 3; ++var) products.push_back(shift_blocks(F, v, prev_blocks, var));
                }
                lower = span_dim<Field>(F, products, cols);
            }
            for (std::size_t i = lower; i < kernel.dim(); ++i) found.push_back(rho + d_ - 1);
            prev_kernel = std::move(kernel);
            prev_blocks = blocks;
        }
    }
    if (found != resolution_.relation_degrees) {
        throw InternalError("explicit relation scan disagrees with the socle of the Milnor algebra");
    }
    if (want != m - 2) {
        throw InternalError("resolution rank does not match: " + std::to_string(m) + " generators, " +
                            std::to_string(want) + " relations");
    }
    resolution_.shifts.clear();
    int sum = 0;
    for (int j = 0; j < want; ++j) {
        int eps = resolution_.relation_degrees[j] - d_ - ex[j + 2] + 1;
        if (eps < 1) throw InternalError("relation shift below 1");
        resolution_.shifts.push_back(eps);
        sum += eps;
    }
    if (sum != t && want > 0) throw InternalError("sum of relation shifts differs from the type");
}

template <class Field>
std::vector<long> JacobianEngine<Field>::saturation_pass(int start) const
{
    const Field& F = field();
    std::vector<long> out(start + 1, 0);
    SubspaceBasis<Field> a(F, static_cast<std::size_t>(dims_[start]));
    for (int s = start - 1; s >= 0; --s) {
        ExactMatrix<Field> q = quotient_projection(a);
        std::vector<ExactMatrix<Field>> blocks;
        for (int i = 0; i < 3; ++i) blocks.push_back(matmul(q, mult_[s + 1][i]));
        a = kernel_basis(stack(F, blocks, static_cast<std::size_t>(dims_[s])));
        out[s] = static_cast<long>(a.dim());
    }
    return out;
}

template <class Field>
void JacobianEngine<Field>::compute_saturation()
{
    JacobianModuleProfile p;
    p.T = 3 * (d_ - 2);
    if (p.T >= 0) {
        std::vector<long> first = saturation_pass(p.T + 1);
        std::vector<long> second = saturation_pass(p.T + 2);
        std::vector<long> third = saturation_pass(p.T + 3);
        if (second[p.T + 1] != 0 || third[p.T + 1] != 0 || third[p.T + 2] != 0 ||
            !std::equal(first.begin(), first.begin() + p.T + 1, second.begin()) ||
            !std::equal(first.begin(), first.begin() + p.T + 1, third.begin())) {
            throw InternalError("saturation of the Jacobian ideal did not reach a fixpoint by degree T + 1");
        }
        p.n.assign(first.begin(), first.begin() + p.T + 1);
    }
    p.nu = p.n.empty() ? 0 : *std::max_element(p.n.begin(), p.n.end());
    for (std::size_t k = 0; k < p.n.size(); ++k) {
        if (p.n[k] != 0) {
            p.sigma = static_cast<int>(k);
            break;
        }
    }
    for (int k = 0; k <= p.T; ++k) {
        if (p.n[k] != p.n[p.T - k]) throw InternalError("Jacobian module is not symmetric about T/2");
    }
    for (int k = 1; k <= p.T / 2; ++k) {
        if (p.n[k] < p.n[k - 1]) throw InternalError("Jacobian module is not unimodal");
    }
    module_ = std::move(p);
}

template <class Field>
long JacobianEngine<Field>::saturate_jacobian(int k) const
{
    if (!module_) throw std::logic_error("saturation was not computed");
    if (k < 0) return 0;
    long hf = k <= top_ ? dims_[k] : milnor_.tau;
    long n = k <= module_->T ? module_->n[k] : 0;
    return static_cast<long>(monomial_count(k)) - hf + n;
}

template class JacobianEngine<RationalField>;
template class JacobianEngine<PrimeField>;

}  // namespace curveh

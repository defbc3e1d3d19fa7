#include "curveh/analysis.hpp"

namespace curveh {

std::string to_string(Arithmetic a)
{
    switch (a) {
    case Arithmetic::Rational: return "rational";
    case Arithmetic::SinglePrime: return "single-prime";
    case Arithmetic::TwoPrimes: return "two-primes";
    }
    return "unknown";
}

std::optional<mpq_class> rational_reconstruction(const mpz_class& residue, const mpz_class& modulus)
{
    // Extended Euclid on (modulus, residue), stopped once the remainder drops
    // below the bound.
    mpz_class bound;
    mpz_class half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = modulus, r1 = residue % modulus;
    if (r1 < 0) r1 += modulus;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class q(r1, t1);
    q.canonicalize();
    return q;
}

void require_certified(const Analysis& a)
{
    if (!a.certified) {
        throw UncertifiedError("scan bound reached with uncertified presentation (kmax = " + std::to_string(a.kmax) +
                               "); raise the bound with --kmax or CURVEH_KMAX");
    }
}

namespace {

constexpr int kMaxExtraPrimes = 8;

std::uint32_t usable_prime(const Poly& f, std::uint32_t start, std::uint32_t avoid)
{
    for (std::uint32_t p = start; p > 1000; --p) {
        if (p == avoid || !is_probable_prime(p)) continue;
        try {
            PolyModP g = reduce_mod(f, PrimeField(p));
            if (g.term_count() == f.term_count()) return p;
        } catch (const std::domain_error&) {
        }
    }
    throw std::domain_error("no usable prime below " + std::to_string(start));
}

/// Every integer a run reports; two primes must agree on all of it.
template <class Field>
std::vector<long> signature(const JacobianEngine<Field>& e)
{
    std::vector<long> s;
    auto put = [&](const std::vector<long>& v) {
        s.push_back(static_cast<long>(v.size()));
        s.insert(s.end(), v.begin(), v.end());
    };
    put(e.milnor_profile().hf);
    put(e.socle_dims());
    put(e.generator_counts());
    const auto& r = e.resolution_summary();
    put(std::vector<long>(r.relation_degrees.begin(), r.relation_degrees.end()));
    put(std::vector<long>(r.shifts.begin(), r.shifts.end()));
    s.push_back(r.certified ? 1 : 0);
    if (e.jacobian_module_profile()) put(e.jacobian_module_profile()->n);
    return s;
}

template <class Field>
void fill(Analysis& a, const JacobianEngine<Field>& e)
{
    a.kmax = e.kmax();
    a.milnor = e.milnor_profile();
    const auto& r = e.resolution_summary();
    a.m = r.m;
    a.exponents = r.exponents;
    a.relation_degrees = r.relation_degrees;
    a.shifts = r.shifts;
    a.certified = r.certified;
    a.module = e.jacobian_module_profile();
}

/// Scales a rational triple to coprime integer coefficients.
std::array<Poly, 3> primitive_triple(const std::array<Poly, 3>& t)
{
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& p : t) {
        for (const auto& [m, c] : p.terms()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        }
    }
    if (num_gcd == 0) return t;
    mpq_class s(den_lcm, num_gcd);
    s.canonicalize();
    return {scale(t[0], s), scale(t[1], s), scale(t[2], s)};
}

bool is_syzygy(const std::array<Poly, 3>& partials, const std::array<Poly, 3>& t)
{
    Poly sum = multiply(t[0], partials[0]) + multiply(t[1], partials[1]) + multiply(t[2], partials[2]);
    return sum.is_zero();
}

GeneratorRecord record(int degree, const std::array<Poly, 3>& t)
{
    auto p = primitive_triple(t);
    return {degree, {render(p[0]), render(p[1]), render(p[2])}};
}

/// Lifts generator vectors known modulo `modulus` (residues given per
/// coordinate) to verified rational syzygies; false if any fails.
bool lift_generators(const Poly& f, const std::vector<int>& degrees, const std::vector<std::vector<mpz_class>>& residues,
                     const mpz_class& modulus, std::vector<GeneratorRecord>& out)
{
    auto partials = partial_derivatives(f);
    std::vector<GeneratorRecord> lifted;
    RationalField Q;
    for (std::size_t g = 0; g < degrees.size(); ++g) {
        Vec<RationalField> v;
        v.reserve(residues[g].size());
        for (const auto& r : residues[g]) {
            auto q = rational_reconstruction(r, modulus);
            if (!q) return false;
            v.push_back(*q);
        }
        auto triple = triple_from_vector(Q, degrees[g], v);
        if (!is_syzygy(partials, triple)) return false;
        lifted.push_back(record(degrees[g], triple));
    }
    out = std::move(lifted);
    return true;
}

std::vector<GeneratorRecord> residue_records(const JacobianEngine<PrimeField>& e)
{
    std::vector<GeneratorRecord> out;
    for (const auto& g : e.resolution_summary().generators) {
        out.push_back({g.degree, {render(g.components[0]), render(g.components[1]), render(g.components[2])}});
    }
    return out;
}

}  // namespace

Analysis analyze(const Poly& f, const AnalysisOptions& options)
{
    Analysis a;
    a.polynomial = render(f);
    a.d = f.degree();
    a.arithmetic = options.arithmetic;
    EngineOptions eo{options.kmax, options.saturation};

    if (options.arithmetic == Arithmetic::Rational) {
        JacobianEngine<RationalField> e(f, eo);
        fill(a, e);
        for (const auto& g : e.resolution_summary().generators) a.generators.push_back(record(g.degree, g.components));
        a.generators_exact = true;
        return a;
    }

    std::uint32_t p1 = usable_prime(f, options.prime, 0);
    a.primes.push_back(p1);
    PrimeField F1(p1);

    if (options.arithmetic == Arithmetic::SinglePrime) {
        JacobianEngine<PrimeField> e(reduce_mod(f, F1), eo);
        fill(a, e);
        std::vector<std::vector<mpz_class>> residues;
        for (const auto& v : e.generator_vectors()) residues.emplace_back(v.begin(), v.end());
        a.generators_exact = lift_generators(f, a.exponents, residues, mpz_class(p1), a.generators);
        if (!a.generators_exact) a.generators = residue_records(e);
        return a;
    }

    std::uint32_t p2 = usable_prime(f, options.second_prime, p1);
    a.primes.push_back(p2);
    PrimeField F2(p2);

    std::optional<JacobianEngine<PrimeField>> e1, e2;
    std::optional<NonReducedError> failure1, failure2;
    try {
        e1.emplace(reduce_mod(f, F1), eo);
    } catch (const NonReducedError& err) {
        failure1 = err;
    }
    try {
        e2.emplace(reduce_mod(f, F2), eo);
    } catch (const NonReducedError& err) {
        failure2 = err;
    }
    if (failure1 && failure2) throw *failure1;
    if (failure1 || failure2) {
        throw InternalError("primes " + std::to_string(p1) + " and " + std::to_string(p2) +
                            " disagree on reducedness; rerun with --rational");
    }
    if (signature(*e1) != signature(*e2)) {
        throw InternalError("primes " + std::to_string(p1) + " and " + std::to_string(p2) +
                            " disagree on a reported invariant; rerun with --rational");
    }
    fill(a, *e1);

    const auto& g1 = e1->generator_vectors();
    const auto& g2 = e2->generator_vectors();
    mpz_class modulus = mpz_class(p1) * mpz_class(p2);
    mpz_class inv;
    mpz_class p1z(p1), p2z(p2);
    mpz_invert(inv.get_mpz_t(), p1z.get_mpz_t(), p2z.get_mpz_t());
    std::vector<std::vector<mpz_class>> residues;
    bool aligned = g1.size() == g2.size();
    for (std::size_t g = 0; aligned && g < g1.size(); ++g) {
        if (g1[g].size() != g2[g].size()) {
            aligned = false;
            break;
        }
        std::vector<mpz_class> r(g1[g].size());
        for (std::size_t i = 0; i < g1[g].size(); ++i) {
            mpz_class a1(g1[g][i]), a2(g2[g][i]);
            mpz_class k = ((a2 - a1) * inv) % p2z;
            if (k < 0) k += p2z;
            r[i] = a1 + p1z * k;
        }
        residues.push_back(std::move(r));
    }
    a.generators_exact = aligned && lift_generators(f, a.exponents, residues, modulus, a.generators);

    // Large coefficients need a bigger modulus: add primes one at a time.
    std::uint32_t next = std::min(p1, p2);
    for (int extra = 0; aligned && !a.generators_exact && extra < kMaxExtraPrimes; ++extra) {
        std::uint32_t p = usable_prime(f, next - 1, 0);
        next = p;
        if (p == p1 || p == p2) continue;
        EngineOptions lift_opts{a.kmax, false};
        JacobianEngine<PrimeField> ep(reduce_mod(f, PrimeField(p)), lift_opts);
        const auto& gp = ep.generator_vectors();
        if (ep.generator_counts() != e1->generator_counts() || gp.size() != residues.size()) continue;
        mpz_class pz(p), minv;
        mpz_class mod_p = modulus % pz;
        mpz_invert(minv.get_mpz_t(), mod_p.get_mpz_t(), pz.get_mpz_t());
        bool shapes = true;
        for (std::size_t g = 0; g < gp.size(); ++g) shapes = shapes && gp[g].size() == residues[g].size();
        if (!shapes) continue;
        for (std::size_t g = 0; g < gp.size(); ++g) {
            for (std::size_t i = 0; i < gp[g].size(); ++i) {
                mpz_class k = ((mpz_class(gp[g][i]) - residues[g][i]) * minv) % pz;
                if (k < 0) k += pz;
                residues[g][i] += modulus * k;
            }
        }
        modulus *= pz;
        a.primes.push_back(p);
        a.generators_exact = lift_generators(f, a.exponents, residues, modulus, a.generators);
    }
    if (!a.generators_exact) a.generators = residue_records(*e1);
    return a;
}

}  // namespace curveh

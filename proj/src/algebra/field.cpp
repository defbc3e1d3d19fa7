#include "curveh/field.hpp"

namespace curveh {

bool is_probable_prime(std::uint32_t n)
{
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 32-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto powmod = [n](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= n;
        while (e) {
            if (e & 1) r = r * b % n;
            b = b * b % n;
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2u, 7u, 61u}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), mersenne_(p == 2147483647u)
{
    if (p >= (1u << 31) || !is_probable_prime(p)) {
        throw std::invalid_argument("modulus must be a prime below 2^31: " + std::to_string(p));
    }
}

PrimeField::Element PrimeField::from_int(long v) const
{
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const
{
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const
{
    Element den = from_integer(q.get_den());
    if (den == 0) {
        throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes modulo " +
                                std::to_string(p_));
    }
    return mul(from_integer(q.get_num()), inv(den));
}

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a == 0) throw std::domain_error("inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
}

}  // namespace curveh

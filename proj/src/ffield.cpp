#include "gridfree/ffield.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gridfree/parallel.hpp"

namespace gridfree {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("modulus must be an odd prime >= 3, got " +
                                    std::to_string(p));
    if (p > kMaxModulus)
        throw std::invalid_argument("modulus exceeds 2^61 - 1");
    if (!is_prime_u64(p))
        throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    return powmod(a % p_, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid on (a, p), tracking only the coefficient of a.
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p_))
                 : static_cast<std::uint64_t>(t);
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
PrimeField::residue_classes() const {
    std::vector<bool> is_square(p_, false);
    for (std::uint64_t x = 1; x < p_; ++x) is_square[mul(x, x)] = true;
    std::vector<std::uint64_t> qr, qnr;
    qr.reserve((p_ - 1) / 2);
    qnr.reserve((p_ - 1) / 2);
    for (std::uint64_t v = 1; v < p_; ++v)
        (is_square[v] ? qr : qnr).push_back(v);
    return {std::move(qr), std::move(qnr)};
}

void Fp::require_same_modulus(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_)
        throw std::invalid_argument("field element modulus mismatch: " +
                                    std::to_string(a.p_) + " vs " +
                                    std::to_string(b.p_));
}

Fp operator+(const Fp& a, const Fp& b) {
    Fp::require_same_modulus(a, b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_, 0);
}

Fp operator-(const Fp& a, const Fp& b) {
    Fp::require_same_modulus(a, b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_, 0);
}

Fp operator*(const Fp& a, const Fp& b) {
    Fp::require_same_modulus(a, b);
    return Fp(mulmod(a.v_, b.v_, a.p_), a.p_, 0);
}

Fp Fp::operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, 0); }

Fp Fp::inv() const { return Fp(PrimeField(p_).inv(v_), p_, 0); }

int default_thread_count() {
    if (const char* env = std::getenv("GRIDFREE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

}  // namespace gridfree

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gridfree {

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Arithmetic context for the prime field F_p, p an odd prime.
/// Values are plain uint64_t residues in [0, p). Multiplication widens
/// to 128 bits, so any p below 2^61 is safe.
class PrimeField {
public:
    static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 61) - 1;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t reduce(std::uint64_t a) const { return a % p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        if (s >= p_) s -= p_;
        return s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// Multiplicative inverse via extended Euclid. a = 0 is a domain error.
    std::uint64_t inv(std::uint64_t a) const;

    /// Half of p+1, i.e. the residue of 1/2. Handy for the relation y = (x+z)/2.
    std::uint64_t half() const { return (p_ + 1) / 2; }

    /// Nonzero quadratic residues and non-residues, both sorted.
    /// Computed by squaring every nonzero element: O(p), exact.
    std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
    residue_classes() const;

private:
    std::uint64_t p_;
};

/// A single element of F_p carrying its modulus. Binary operations
/// require matching moduli and throw std::invalid_argument otherwise.
class Fp {
public:
    Fp(std::uint64_t value, const PrimeField& field)
        : v_(field.reduce(value)), p_(field.modulus()) {}
    Fp(std::uint64_t value, std::uint64_t p) : Fp(value, PrimeField(p)) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend Fp operator+(const Fp& a, const Fp& b);
    friend Fp operator-(const Fp& a, const Fp& b);
    friend Fp operator*(const Fp& a, const Fp& b);
    Fp operator-() const;
    Fp inv() const;

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    Fp(std::uint64_t v, std::uint64_t p, int) : v_(v), p_(p) {}  // pre-reduced
    static void require_same_modulus(const Fp& a, const Fp& b);

    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace gridfree

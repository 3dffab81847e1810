#pragma once

#include <cstdint>
#include <string>

#include "artin/error.hpp"

namespace artin {

using Residue = std::uint32_t;

inline constexpr bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// The prime field F_p. Residues are kept in [0, p); p < 2^31 so sums fit in 32 bits.
class FieldSpec {
public:
    static constexpr std::uint32_t default_prime = 101;

    constexpr FieldSpec() = default;

    explicit FieldSpec(std::uint64_t prime) : p_(static_cast<std::uint32_t>(prime)) {
        if (prime >= (std::uint64_t{1} << 31) || !is_prime(prime))
            throw Error(ErrorCode::field_not_prime, std::to_string(prime) + " is not a prime below 2^31");
    }

    constexpr std::uint32_t prime() const noexcept { return p_; }

    constexpr Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    constexpr Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    constexpr Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    constexpr Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    /// a*b + c, reduced.
    constexpr Residue fma(Residue a, Residue b, Residue c) const noexcept {
        return static_cast<Residue>((static_cast<std::uint64_t>(a) * b + c) % p_);
    }

    Residue inv(Residue a) const {
        if (a == 0)
            throw Error(ErrorCode::contract_violation, "inverse of zero in F_" + std::to_string(p_));
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return static_cast<Residue>(t < 0 ? t + p_ : t);
    }

    constexpr Residue pow(Residue a, std::uint64_t e) const noexcept {
        Residue result = 1 % p_;
        while (e > 0) {
            if (e & 1)
                result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    /// Reduces any signed integer into [0, p).
    constexpr Residue from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }

    friend constexpr bool operator==(FieldSpec a, FieldSpec b) noexcept { return a.p_ == b.p_; }

private:
    std::uint32_t p_ = default_prime;
};

} // namespace artin

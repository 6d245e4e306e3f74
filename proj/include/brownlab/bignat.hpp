#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace brownlab {

// Arbitrary-precision natural number. Subtraction below zero throws InvalidArgument.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
    explicit BigNat(const std::string& decimal);

    static BigNat pow2(std::uint64_t exponent);

    BigNat& operator+=(const BigNat& o);
    BigNat& operator-=(const BigNat& o);
    BigNat& operator*=(const BigNat& o);
    BigNat& operator/=(const BigNat& o);

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
    friend BigNat operator/(BigNat a, const BigNat& b) { return a /= b; }
    BigNat operator%(const BigNat& m) const;

    friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // Number of binary digits; 0 for zero.
    std::uint64_t bit_length() const;
    bool fits_u64() const;
    std::optional<std::uint64_t> to_u64() const;
    bool is_power_of_two() const;

    std::string to_string() const;
    // Decimal below 10^6, otherwise "d.ddddde+N" (truncated mantissa).
    std::string to_scientific(int digits = 6) const;

    const mpz_class& raw() const { return v_; }

private:
    explicit BigNat(mpz_class v) : v_(std::move(v)) {}
    mpz_class v_{0};
};

}  // namespace brownlab

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace coverpeb {

/// Arbitrary-precision unsigned integer, just wide enough for this library:
/// standard values sum terms of the form count * 2^distance, and the result
/// must be exact no matter the graph diameter. Stored as base-2^32 limbs,
/// little-endian, normalized (no trailing zero limbs; zero has no limbs).
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v); // NOLINT: implicit by design, mirrors integer literals

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator-=(const BigUint& rhs); // requires *this >= rhs
    BigUint operator+(const BigUint& rhs) const;
    BigUint operator-(const BigUint& rhs) const;
    BigUint operator*(const BigUint& rhs) const;
    BigUint& operator*=(const BigUint& rhs);

    /// *this += count * 2^shift. The workhorse of standard-value sums.
    void add_shifted(std::uint64_t count, unsigned shift);

    /// 2^shift as a value.
    static BigUint pow2(unsigned shift);

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const = default;

    bool fits_uint64() const { return limbs_.size() <= 2; }
    std::uint64_t to_uint64() const; // throws OverflowError if it does not fit

    std::string to_string() const; // decimal
    static BigUint from_string(const std::string& decimal);

private:
    void normalize();
    std::vector<std::uint32_t> limbs_;
};

std::ostream& operator<<(std::ostream& os, const BigUint& v);

} // namespace coverpeb

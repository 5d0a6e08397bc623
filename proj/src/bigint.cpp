#include "coverpeb/bigint.hpp"

#include <algorithm>
#include <ostream>

#include "coverpeb/errors.hpp"

namespace coverpeb {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

void BigUint::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
        if (carry == 0 && i >= rhs.limbs_.size()) return *this;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    if (*this < rhs) throw InternalError("BigUint subtraction would go negative");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
        borrow = 0;
        if (diff < 0) {
            diff += (std::int64_t{1} << 32);
            borrow = 1;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    normalize();
    return *this;
}

BigUint BigUint::operator+(const BigUint& rhs) const {
    BigUint r = *this;
    r += rhs;
    return r;
}

BigUint BigUint::operator-(const BigUint& rhs) const {
    BigUint r = *this;
    r -= rhs;
    return r;
}

BigUint BigUint::operator*(const BigUint& rhs) const {
    BigUint r;
    if (limbs_.empty() || rhs.limbs_.empty()) return r;
    r.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.normalize();
    return r;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    *this = *this * rhs;
    return *this;
}

void BigUint::add_shifted(std::uint64_t count, unsigned shift) {
    if (count == 0) return;
    const unsigned limb_shift = shift / 32;
    const unsigned bit_shift = shift % 32;
    // count * 2^shift spans at most three limbs beyond the limb offset.
    std::uint64_t lo = bit_shift ? (count << bit_shift) : count;
    std::uint64_t hi = bit_shift ? (count >> (64 - bit_shift)) : 0;
    std::uint32_t parts[3] = {static_cast<std::uint32_t>(lo),
                              static_cast<std::uint32_t>(lo >> 32),
                              static_cast<std::uint32_t>(hi)};

    if (limbs_.size() < limb_shift + 3) limbs_.resize(limb_shift + 3, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < 3 || carry; ++i) {
        std::size_t pos = limb_shift + i;
        if (pos >= limbs_.size()) limbs_.resize(pos + 1, 0);
        std::uint64_t sum = carry + limbs_[pos] + (i < 3 ? parts[i] : 0);
        limbs_[pos] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    normalize();
}

BigUint BigUint::pow2(unsigned shift) {
    BigUint r;
    r.add_shifted(1, shift);
    return r;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::uint64_t BigUint::to_uint64() const {
    if (limbs_.size() > 2) throw OverflowError("value does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    // Repeated division by 10^9, collecting digit groups.
    std::vector<std::uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string group = std::to_string(rem);
        if (work.empty()) {
            out.insert(0, group);
        } else {
            out.insert(0, std::string(9 - group.size(), '0') + group);
        }
    }
    return out;
}

BigUint BigUint::from_string(const std::string& decimal) {
    if (decimal.empty()) throw FormatError("empty integer literal");
    BigUint r;
    for (char c : decimal) {
        if (c < '0' || c > '9') throw FormatError("bad digit in integer literal");
        r *= BigUint(10);
        r += BigUint(static_cast<std::uint64_t>(c - '0'));
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigUint& v) {
    return os << v.to_string();
}

} // namespace coverpeb

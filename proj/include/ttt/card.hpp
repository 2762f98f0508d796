#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ttt {

// A count in {0, 1, 2, ...} ∪ {w}. Arithmetic saturates at w:
// w + k = w, w + w = w, and m * n = w whenever either factor is w
// and the other is nonzero.
class Card {
public:
    constexpr Card() : v_(0) {}
    constexpr Card(uint64_t n) : v_(n) {}

    static constexpr Card omega() { return Card(kOmega, Tag{}); }

    constexpr bool is_omega() const { return v_ == kOmega; }
    constexpr bool is_finite() const { return v_ != kOmega; }
    constexpr uint64_t finite() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    constexpr Card operator+(Card o) const {
        if (is_omega() || o.is_omega()) return omega();
        uint64_t s = v_ + o.v_;
        return s < v_ ? omega() : Card(s);  // overflow saturates
    }
    constexpr Card operator*(Card o) const {
        if (v_ == 0 || o.v_ == 0) return Card(0);
        if (is_omega() || o.is_omega()) return omega();
        if (v_ > kOmega / o.v_) return omega();
        return Card(v_ * o.v_);
    }
    Card& operator+=(Card o) { *this = *this + o; return *this; }

    // w is strictly greater than every finite count.
    constexpr std::strong_ordering operator<=>(const Card& o) const = default;

    std::string str() const { return is_omega() ? "w" : std::to_string(v_); }

private:
    struct Tag {};
    constexpr Card(uint64_t raw, Tag) : v_(raw) {}
    static constexpr uint64_t kOmega = UINT64_MAX;
    uint64_t v_;
};

}  // namespace ttt

#ifndef TNET_TIME_HPP
#define TNET_TIME_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace tnet {

// A discrete time point. Finite values are integers; infinity() marks
// "never" (absent arrivals, unreachable states).
class TimePoint {
public:
    constexpr TimePoint() : v_(0) {}
    constexpr TimePoint(std::int64_t v) : v_(v) {}

    static constexpr TimePoint infinity() { return TimePoint(kInf, Tag{}); }

    constexpr bool is_infinite() const { return v_ == kInf; }
    constexpr bool is_finite() const { return v_ != kInf; }

    // Finite value; callers must check is_finite() first.
    constexpr std::int64_t value() const { return v_; }

    friend constexpr auto operator<=>(TimePoint a, TimePoint b) = default;

    // Saturating addition: infinity propagates.
    friend constexpr TimePoint operator+(TimePoint a, TimePoint b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return TimePoint(a.v_ + b.v_);
    }

    friend constexpr TimePoint min(TimePoint a, TimePoint b) { return a < b ? a : b; }

    friend std::ostream& operator<<(std::ostream& os, TimePoint t) {
        if (t.is_infinite()) return os << "inf";
        return os << t.v_;
    }

private:
    struct Tag {};
    constexpr TimePoint(std::int64_t v, Tag) : v_(v) {}
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::int64_t v_;
};

inline std::string to_string(TimePoint t) {
    return t.is_infinite() ? "inf" : std::to_string(t.value());
}

// Half-open interval [start, end) with finite integer endpoints, start < end.
struct Interval {
    std::int64_t start = 0;
    std::int64_t end = 0;

    constexpr bool contains(std::int64_t t) const { return start <= t && t < end; }
    constexpr bool contains(TimePoint t) const { return t.is_finite() && contains(t.value()); }
    constexpr std::int64_t length() const { return end - start; }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Interval& iv) {
        return os << '[' << iv.start << ',' << iv.end << ')';
    }
};

}  // namespace tnet

#endif  // TNET_TIME_HPP

#ifndef TNET_SEMIRING_HPP
#define TNET_SEMIRING_HPP

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>

#include "tnet/time.hpp"

namespace tnet {

// A semiring instance: a value type plus the operations the rest of the
// toolkit is parameterized over. Instances are small copyable objects so
// that configurable ones (geodetic tie tolerance, temporal windows) can
// carry state.
template <class S>
concept Semiring = requires(const S s, const typename S::value_type a, const typename S::value_type b) {
    typename S::value_type;
    { s.zero() } -> std::convertible_to<typename S::value_type>;
    { s.one() } -> std::convertible_to<typename S::value_type>;
    { s.add(a, b) } -> std::convertible_to<typename S::value_type>;
    { s.mul(a, b) } -> std::convertible_to<typename S::value_type>;
    { s.absorptive() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

template <class S>
concept ClosedSemiring = Semiring<S> && requires(const S s, const typename S::value_type a) {
    { s.star(a) } -> std::convertible_to<typename S::value_type>;
};

// Natural number with +infinity; all arithmetic saturates at infinity.
class Count {
public:
    constexpr Count() : v_(0) {}
    constexpr Count(std::uint64_t v) : v_(v) {}

    static constexpr Count infinity() { return Count(kInf); }

    constexpr bool is_infinite() const { return v_ == kInf; }
    constexpr std::uint64_t value() const { return v_; }

    friend constexpr Count operator+(Count a, Count b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        std::uint64_t s = a.v_ + b.v_;
        if (s < a.v_) return infinity();
        return Count(s);
    }

    friend constexpr Count operator*(Count a, Count b) {
        if (a.v_ == 0 || b.v_ == 0) return Count(0);
        if (a.is_infinite() || b.is_infinite()) return infinity();
        if (a.v_ > kInf / b.v_) return infinity();
        return Count(a.v_ * b.v_);
    }

    friend constexpr bool operator==(Count, Count) = default;
    friend constexpr auto operator<=>(Count, Count) = default;

    friend std::ostream& operator<<(std::ostream& os, Count c) {
        if (c.is_infinite()) return os << "inf";
        return os << c.v_;
    }

private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t v_;
};

// Counting semiring (rule of sum / rule of product).
struct CombinatorialSemiring {
    using value_type = Count;

    Count zero() const { return Count(0); }
    Count one() const { return Count(1); }
    Count add(Count a, Count b) const { return a + b; }
    Count mul(Count a, Count b) const { return a * b; }
    // star(0) = 1; the geometric series diverges for anything else.
    Count star(Count a) const { return a == Count(0) ? Count(1) : Count::infinity(); }
    bool absorptive() const { return false; }
};

// Min-plus over non-negative reals with infinity (shortest paths).
struct ShortestPathSemiring {
    using value_type = double;

    double zero() const { return std::numeric_limits<double>::infinity(); }
    double one() const { return 0.0; }
    double add(double a, double b) const { return a < b ? a : b; }
    double mul(double a, double b) const { return a + b; }
    double star(double) const { return 0.0; }
    bool absorptive() const { return true; }
};

// Min-plus over integer time points; used for latency quantities and the
// bodies of first-arrival step functions (absence = infinity = zero).
struct MinPlusSemiring {
    using value_type = TimePoint;

    TimePoint zero() const { return TimePoint::infinity(); }
    TimePoint one() const { return TimePoint(0); }
    TimePoint add(TimePoint a, TimePoint b) const { return min(a, b); }
    TimePoint mul(TimePoint a, TimePoint b) const { return a + b; }
    TimePoint star(TimePoint) const { return TimePoint(0); }
    bool absorptive() const { return true; }
};

// Or/and over booleans; used for node presence sets.
struct BooleanSemiring {
    using value_type = bool;

    bool zero() const { return false; }
    bool one() const { return true; }
    bool add(bool a, bool b) const { return a || b; }
    bool mul(bool a, bool b) const { return a && b; }
    bool star(bool) const { return true; }
    bool absorptive() const { return true; }
};

// Length of a shortest route paired with the number of routes achieving it.
struct GeodeticValue {
    double length = std::numeric_limits<double>::infinity();
    Count count = Count(0);

    friend constexpr bool operator==(const GeodeticValue&, const GeodeticValue&) = default;
    friend std::ostream& operator<<(std::ostream& os, const GeodeticValue& g) {
        return os << '(' << g.length << ',' << g.count << ')';
    }
};

// Shortest-path length plus route count. The tie branch of the addition
// changes counts, so length equality is deliberate: exact for integral
// lengths, within `tie_epsilon` otherwise.
class GeodeticSemiring {
public:
    using value_type = GeodeticValue;

    explicit GeodeticSemiring(double tie_epsilon = 1e-12) : eps_(tie_epsilon) {}

    GeodeticValue zero() const { return {std::numeric_limits<double>::infinity(), Count(0)}; }
    GeodeticValue one() const { return {0.0, Count(1)}; }

    GeodeticValue add(const GeodeticValue& x, const GeodeticValue& y) const {
        if (lengths_equal(x.length, y.length)) return {x.length, x.count + y.count};
        return x.length < y.length ? x : y;
    }

    GeodeticValue mul(const GeodeticValue& x, const GeodeticValue& y) const {
        GeodeticValue r{x.length + y.length, x.count * y.count};
        if (std::isinf(r.length)) r.count = Count(0);
        return r;
    }

    GeodeticValue star(const GeodeticValue& x) const {
        if (x.length == 0.0 && x.count != Count(0)) return {0.0, Count::infinity()};
        return {0.0, Count(1)};
    }

    bool absorptive() const { return false; }

    bool lengths_equal(double a, double b) const {
        if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
        if (a == b) return true;
        bool integral = std::nearbyint(a) == a && std::nearbyint(b) == b;
        if (integral) return false;  // exact comparison already failed
        return std::fabs(a - b) <= eps_;
    }

private:
    double eps_;
};

// (first time, inner value). Canonical form: an infinite time forces the
// inner value to the inner zero, so equality stays structural.
template <class A>
struct GGValue {
    TimePoint time = TimePoint::infinity();
    A value{};

    friend constexpr bool operator==(const GGValue&, const GGValue&) = default;
    friend std::ostream& operator<<(std::ostream& os, const GGValue& v) {
        return os << '(' << v.time << ',' << v.value << ')';
    }
};

// Pairs (time, inner value): addition keeps the earlier time and merges
// inner values on ties; multiplication adds times and multiplies values.
template <Semiring Inner>
class GeneralizedGeodeticSemiring {
public:
    using inner_type = Inner;
    using value_type = GGValue<typename Inner::value_type>;

    explicit GeneralizedGeodeticSemiring(Inner inner = Inner()) : inner_(inner) {}

    const Inner& inner() const { return inner_; }

    value_type zero() const { return {TimePoint::infinity(), inner_.zero()}; }
    value_type one() const { return {TimePoint(0), inner_.one()}; }

    value_type add(const value_type& x, const value_type& y) const {
        if (x.time < y.time) return x;
        if (y.time < x.time) return y;
        return {x.time, inner_.add(x.value, y.value)};
    }

    value_type mul(const value_type& x, const value_type& y) const {
        TimePoint t = x.time + y.time;
        if (t.is_infinite()) return zero();
        return {t, inner_.mul(x.value, y.value)};
    }

    bool absorptive() const { return false; }

private:
    Inner inner_;
};

}  // namespace tnet

#endif  // TNET_SEMIRING_HPP

#ifndef TNET_TEMPORAL_QUANTITY_HPP
#define TNET_TEMPORAL_QUANTITY_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <vector>

#include "tnet/error.hpp"
#include "tnet/semiring.hpp"
#include "tnet/time.hpp"

namespace tnet {

template <class V>
struct TqPiece {
    Interval interval;
    V value{};

    friend constexpr bool operator==(const TqPiece&, const TqPiece&) = default;
};

// A function from time into a semiring, encoded as sorted disjoint
// half-open intervals of constant value. Outside the stored intervals the
// function equals the semiring zero. Canonical form: no zero values,
// adjacent intervals with equal values merged.
//
// Instances are only built through normalize() and the pointwise
// operations, so canonical form always holds.
template <class V>
class TemporalQuantity {
public:
    TemporalQuantity() = default;

    const std::vector<TqPiece<V>>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    std::size_t size() const { return pieces_.size(); }

    // Support bounds; callers must check empty() first.
    std::int64_t support_start() const { return pieces_.front().interval.start; }
    std::int64_t support_end() const { return pieces_.back().interval.end; }

    friend bool operator==(const TemporalQuantity&, const TemporalQuantity&) = default;

    friend std::ostream& operator<<(std::ostream& os, const TemporalQuantity& tq) {
        os << '[';
        bool first = true;
        for (const auto& p : tq.pieces_) {
            if (!first) os << ", ";
            first = false;
            os << '(' << p.interval.start << ", " << p.interval.end << ", " << p.value << ')';
        }
        return os << ']';
    }

private:
    template <class W>
    friend class TqBuilder;

    std::vector<TqPiece<V>> pieces_;
};

// Accumulates pieces in increasing order, merging equal adjacent values
// and dropping zeros. Input pieces must arrive sorted and disjoint.
template <class V>
class TqBuilder {
public:
    explicit TqBuilder(V zero) : zero_(std::move(zero)) {}

    void append(std::int64_t start, std::int64_t end, V value) {
        if (start >= end) return;
        if (value == zero_) return;
        if (!out_.pieces_.empty()) {
            auto& last = out_.pieces_.back();
            if (last.interval.end == start && last.value == value) {
                last.interval.end = end;
                return;
            }
        }
        out_.pieces_.push_back({{start, end}, std::move(value)});
    }

    TemporalQuantity<V> take() { return std::move(out_); }

private:
    V zero_;
    TemporalQuantity<V> out_;
};

template <class V>
struct RawPiece {
    std::int64_t start;
    std::int64_t end;
    V value;
};

// Canonicalizes raw (start, end, value) pieces: sorts, drops zero values,
// merges equal adjacent values. Intersecting pieces with equal values are
// merged; with different values they raise OverlapError.
template <Semiring S>
TemporalQuantity<typename S::value_type> normalize(std::vector<RawPiece<typename S::value_type>> raw,
                                                   const S& s) {
    using V = typename S::value_type;
    for (const auto& p : raw) {
        if (p.start >= p.end) {
            std::ostringstream msg;
            msg << "empty interval [" << p.start << ',' << p.end << ')';
            throw Error(msg.str());
        }
    }
    std::erase_if(raw, [&](const RawPiece<V>& p) { return p.value == s.zero(); });
    std::sort(raw.begin(), raw.end(),
              [](const RawPiece<V>& a, const RawPiece<V>& b) { return a.start < b.start || (a.start == b.start && a.end < b.end); });

    TqBuilder<V> out(s.zero());
    std::int64_t cur_start = 0, cur_end = 0;
    V cur_value{};
    bool open = false;
    for (auto& p : raw) {
        if (open && p.start < cur_end) {
            if (!(p.value == cur_value)) {
                std::ostringstream msg;
                msg << "intervals [" << cur_start << ',' << cur_end << ") and [" << p.start << ','
                    << p.end << ") overlap with different values";
                throw OverlapError(msg.str());
            }
            cur_end = std::max(cur_end, p.end);
            continue;
        }
        if (open) out.append(cur_start, cur_end, std::move(cur_value));
        cur_start = p.start;
        cur_end = p.end;
        cur_value = std::move(p.value);
        open = true;
    }
    if (open) out.append(cur_start, cur_end, std::move(cur_value));
    return out.take();
}

// Convenience for literal fixtures and tests.
template <Semiring S>
TemporalQuantity<typename S::value_type>
make_quantity(std::initializer_list<RawPiece<typename S::value_type>> raw, const S& s) {
    return normalize<S>(std::vector<RawPiece<typename S::value_type>>(raw), s);
}

// Value at a single time point; the semiring zero outside the support.
template <Semiring S>
typename S::value_type value_at(const TemporalQuantity<typename S::value_type>& tq, TimePoint t,
                                const S& s) {
    if (!t.is_finite()) return s.zero();
    const auto& ps = tq.pieces();
    auto it = std::upper_bound(ps.begin(), ps.end(), t.value(),
                               [](std::int64_t v, const auto& p) { return v < p.interval.start; });
    if (it == ps.begin()) return s.zero();
    --it;
    return it->interval.contains(t.value()) ? it->value : s.zero();
}

namespace detail {

// Applies `op` pointwise over the union of both supports (absent values
// filled with the semiring zero), renormalizing the result.
template <class V, class S, class Op>
TemporalQuantity<V> pointwise(const TemporalQuantity<V>& a, const TemporalQuantity<V>& b,
                              const S& s, Op op) {
    std::vector<std::int64_t> cuts;
    cuts.reserve(2 * (a.size() + b.size()));
    for (const auto& p : a.pieces()) {
        cuts.push_back(p.interval.start);
        cuts.push_back(p.interval.end);
    }
    for (const auto& p : b.pieces()) {
        cuts.push_back(p.interval.start);
        cuts.push_back(p.interval.end);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    TqBuilder<V> out(s.zero());
    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const std::int64_t lo = cuts[i], hi = cuts[i + 1];
        while (ia < a.size() && a.pieces()[ia].interval.end <= lo) ++ia;
        while (ib < b.size() && b.pieces()[ib].interval.end <= lo) ++ib;
        const bool in_a = ia < a.size() && a.pieces()[ia].interval.contains(lo);
        const bool in_b = ib < b.size() && b.pieces()[ib].interval.contains(lo);
        if (!in_a && !in_b) continue;
        V va = in_a ? a.pieces()[ia].value : s.zero();
        V vb = in_b ? b.pieces()[ib].value : s.zero();
        out.append(lo, hi, op(std::move(va), std::move(vb)));
    }
    return out.take();
}

}  // namespace detail

// Pointwise semiring addition over the refined interval partition.
template <Semiring S>
TemporalQuantity<typename S::value_type> pointwise_add(const TemporalQuantity<typename S::value_type>& a,
                                                       const TemporalQuantity<typename S::value_type>& b,
                                                       const S& s) {
    using V = typename S::value_type;
    return detail::pointwise(a, b, s, [&](V x, V y) { return s.add(std::move(x), std::move(y)); });
}

// Pointwise semiring multiplication; zero outside the intersection of the
// supports because the zero absorbs.
template <Semiring S>
TemporalQuantity<typename S::value_type> pointwise_mul(const TemporalQuantity<typename S::value_type>& a,
                                                       const TemporalQuantity<typename S::value_type>& b,
                                                       const S& s) {
    using V = typename S::value_type;
    return detail::pointwise(a, b, s, [&](V x, V y) { return s.mul(std::move(x), std::move(y)); });
}

// Temporal quantities over Inner form a semiring themselves; the unit is
// the inner one over the whole window, so the instance carries the window.
template <Semiring Inner>
class TemporalSemiring {
public:
    using inner_type = Inner;
    using value_type = TemporalQuantity<typename Inner::value_type>;

    TemporalSemiring(Interval window, Inner inner = Inner()) : window_(window), inner_(inner) {}

    const Inner& inner() const { return inner_; }
    Interval window() const { return window_; }

    value_type zero() const { return value_type(); }
    value_type one() const {
        return normalize<Inner>({{window_.start, window_.end, inner_.one()}}, inner_);
    }
    value_type add(const value_type& a, const value_type& b) const {
        return pointwise_add(a, b, inner_);
    }
    value_type mul(const value_type& a, const value_type& b) const {
        return pointwise_mul(a, b, inner_);
    }
    bool absorptive() const { return false; }

private:
    Interval window_;
    Inner inner_;
};

}  // namespace tnet

#endif  // TNET_TEMPORAL_QUANTITY_HPP

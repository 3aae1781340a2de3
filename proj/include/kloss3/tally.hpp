#pragma once

// Exact carrier for exponential sums with rational phases.
//
// An ExponentTally with denominator L represents sum_t count[t] * e(t / L),
// e(x) = exp(2 pi i x). Counts are integers, so tallies built in any order or
// merged from any partition of the enumeration are bit-identical. Complex
// evaluation happens only in value().

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "kloss3/arith.hpp"

namespace kloss3 {

/// e(t/L) with t reduced to the symmetric range for accuracy.
inline std::complex<double> unit_root(i64 t, i64 L) {
    t = mod(t, L);
    if (2 * t > L) t -= L;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(L);
    return {std::cos(theta), std::sin(theta)};
}

class ExponentTally {
public:
    struct Entry {
        i64 residue;
        i64 count;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    /// The zero tally (empty sum).
    ExponentTally() = default;

    /// Entries must be sorted by residue, residues in [0, L), counts nonzero.
    ExponentTally(i64 denominator, std::vector<Entry> entries)
        : denominator_(denominator), entries_(std::move(entries)) {
        if (denominator_ < 1) throw precondition_error("ExponentTally: denominator must be positive");
    }

    /// Single empty-phase term, value 1.
    static ExponentTally one() { return ExponentTally(1, {{0, 1}}); }

    i64 denominator() const { return denominator_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    i64 count_at(i64 t) const {
        t = mod(t, denominator_);
        auto it = std::lower_bound(entries_.begin(), entries_.end(), t,
                                   [](const Entry& e, i64 r) { return e.residue < r; });
        return (it != entries_.end() && it->residue == t) ? it->count : 0;
    }

    /// Sum of |count|; for a direct enumeration this is the number of terms.
    i64 term_count() const {
        i64 n = 0;
        for (const auto& e : entries_) n += e.count < 0 ? -e.count : e.count;
        return n;
    }

    std::complex<double> value() const {
        double re = 0.0, im = 0.0;
        for (const auto& e : entries_) {
            const auto z = unit_root(e.residue, denominator_);
            re += static_cast<double>(e.count) * z.real();
            im += static_cast<double>(e.count) * z.imag();
        }
        return {re + 0.0, im + 0.0};
    }

    /// Tally of the complex conjugate sum: count[t] moves to L - t.
    ExponentTally conjugate() const {
        std::vector<Entry> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back({mod(-e.residue, denominator_), e.count});
        std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.residue < b.residue; });
        return ExponentTally(denominator_, std::move(out));
    }

    /// Exact product of two sums; the result has denominator lcm(L1, L2).
    friend ExponentTally operator*(const ExponentTally& a, const ExponentTally& b);

    friend bool operator==(const ExponentTally& a, const ExponentTally& b) {
        return a.denominator_ == b.denominator_ && a.entries_ == b.entries_;
    }

    /// "count@t/L" pairs separated by spaces.
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& e : entries_) {
            if (!first) os << ' ';
            first = false;
            os << e.count << '@' << e.residue << '/' << denominator_;
        }
        return os.str();
    }

private:
    i64 denominator_ = 1;
    std::vector<Entry> entries_;
};

/// Accumulates residues into an ExponentTally. Dense counting for moderate
/// denominators, sort-and-merge otherwise.
class TallyBuilder {
public:
    static constexpr i64 kDenseLimit = i64{1} << 22;

    explicit TallyBuilder(i64 denominator) : denominator_(denominator) {
        if (denominator_ < 1) throw precondition_error("TallyBuilder: denominator must be positive");
        if (denominator_ <= kDenseLimit) dense_.assign(static_cast<std::size_t>(denominator_), 0);
    }

    i64 denominator() const { return denominator_; }

    /// t must already lie in [0, L).
    void add_reduced(i64 t, i64 count = 1) {
        if (!dense_.empty())
            dense_[static_cast<std::size_t>(t)] += count;
        else
            sparse_.push_back({t, count});
    }

    void add(i64 t, i64 count = 1) { add_reduced(mod(t, denominator_), count); }

    ExponentTally finish() {
        std::vector<ExponentTally::Entry> out;
        if (!dense_.empty()) {
            for (std::size_t t = 0; t < dense_.size(); ++t)
                if (dense_[t] != 0) out.push_back({static_cast<i64>(t), dense_[t]});
        } else {
            std::sort(sparse_.begin(), sparse_.end(),
                      [](const auto& a, const auto& b) { return a.residue < b.residue; });
            for (const auto& e : sparse_) {
                if (!out.empty() && out.back().residue == e.residue)
                    out.back().count += e.count;
                else
                    out.push_back(e);
            }
            std::erase_if(out, [](const auto& e) { return e.count == 0; });
        }
        return ExponentTally(denominator_, std::move(out));
    }

private:
    i64 denominator_;
    std::vector<i64> dense_;
    std::vector<ExponentTally::Entry> sparse_;
};

inline ExponentTally operator*(const ExponentTally& a, const ExponentTally& b) {
    if (a.is_zero() || b.is_zero()) return ExponentTally();
    const i64 g = std::gcd(a.denominator_, b.denominator_);
    const i64 L = a.denominator_ / g * b.denominator_;
    const i64 sa = L / a.denominator_, sb = L / b.denominator_;
    TallyBuilder builder(L);
    for (const auto& x : a.entries_) {
        const i64 base = mulmod(x.residue, sa, L);
        for (const auto& y : b.entries_) {
            i64 t = base + mulmod(y.residue, sb, L);
            if (t >= L) t -= L;
            builder.add_reduced(t, x.count * y.count);
        }
    }
    return builder.finish();
}

/// Relative comparison used for complex values of exact quantities.
inline bool close_relative(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace kloss3

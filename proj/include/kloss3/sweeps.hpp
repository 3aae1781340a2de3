#pragma once

// Bound sweeps over moduli and characters. Rows are produced per modulus in
// parallel and handed to the sink in modulus order.

#include <string>
#include <utility>
#include <vector>

#include "kloss3/ksums.hpp"
#include "kloss3/parallel.hpp"

namespace kloss3 {

struct BoundRow {
    WeylElement w = WeylElement::wl;
    IndexPair m, n;
    ModPair c{1, 1};
    BoundReport report;
};

/// All non-degenerate characters with 1 <= |m1|, |m2| <= K, in a fixed order.
inline std::vector<CharPair> characters_up_to(i64 K) {
    if (K < 1) throw precondition_error("characters_up_to: mmax must be >= 1");
    std::vector<CharPair> out;
    for (i64 a = -K; a <= K; ++a)
        for (i64 b = -K; b <= K; ++b)
            if (a != 0 && b != 0) out.emplace_back(a, b);
    return out;
}

namespace detail {

template <class PerModulus, class Sink>
void sweep_moduli(const std::vector<ModPair>& moduli, unsigned threads, PerModulus&& per, Sink&& sink) {
    constexpr std::size_t kBatch = 64;
    for (std::size_t lo = 0; lo < moduli.size(); lo += kBatch) {
        const std::size_t hi = std::min(moduli.size(), lo + kBatch);
        std::vector<std::vector<BoundRow>> rows(hi - lo);
        parallel_for(hi - lo, threads, [&](std::size_t i) { rows[i] = per(moduli[lo + i]); });
        for (const auto& r : rows) sink(r);
    }
}

} // namespace detail

/// Weil's bound for S(a, b, c), c = 1..cmax, for each (a, b) in `pairs`.
template <class Sink>
void sweep_weil(i64 cmax, const std::vector<IndexPair>& pairs, unsigned threads, Sink&& sink) {
    if (cmax < 1) throw precondition_error("sweep_weil: cmax must be >= 1");
    std::vector<ModPair> moduli;
    for (i64 c = 1; c <= cmax; ++c) moduli.emplace_back(c, 1);
    detail::sweep_moduli(
        moduli, threads,
        [&](ModPair c) {
            std::vector<BoundRow> rows;
            for (const auto& ab : pairs) {
                BoundRow r;
                r.w = WeylElement::w3;
                r.m = {ab.first, 0};
                r.n = {ab.second, 0};
                r.c = c;
                r.report = check_weil(ab.first, ab.second, c.c1());
                rows.push_back(std::move(r));
            }
            return rows;
        },
        sink);
}

/// Stevens' bound for c1, c2 <= cmax and all characters with entries up to K.
template <class Sink>
void sweep_stevens(i64 cmax, i64 K, unsigned threads, Sink&& sink, WlTermCache* cache = nullptr) {
    if (cmax < 1) throw precondition_error("sweep_stevens: cmax must be >= 1");
    const auto chars = characters_up_to(K);
    std::vector<ModPair> moduli;
    for (i64 c1 = 1; c1 <= cmax; ++c1)
        for (i64 c2 = 1; c2 <= cmax; ++c2) moduli.emplace_back(c1, c2);
    detail::sweep_moduli(
        moduli, threads,
        [&](ModPair c) {
            std::vector<BoundRow> rows;
            rows.reserve(chars.size() * chars.size());
            for (const auto& m : chars)
                for (const auto& n : chars) rows.push_back({WeylElement::wl, m.raw(), n.raw(), c, check_stevens(m, n, c, cache)});
            return rows;
        },
        sink);
}

/// Larsen's bounds for w4 and w5 on the Bruhat-admissible moduli c1, c2 <= cmax.
template <class Sink>
void sweep_larsen(i64 cmax, i64 K, unsigned threads, Sink&& sink) {
    if (cmax < 1) throw precondition_error("sweep_larsen: cmax must be >= 1");
    const auto chars = characters_up_to(K);
    std::vector<ModPair> moduli;
    for (i64 c1 = 1; c1 <= cmax; ++c1)
        for (i64 c2 = 1; c2 <= cmax; ++c2)
            if (c1 % c2 == 0 || c2 % c1 == 0) moduli.emplace_back(c1, c2);
    detail::sweep_moduli(
        moduli, threads,
        [&](ModPair c) {
            std::vector<BoundRow> rows;
            for (auto w : {WeylElement::w4, WeylElement::w5}) {
                if (!bruhat_admissible(w, c)) continue;
                for (const auto& m : chars)
                    for (const auto& n : chars) rows.push_back({w, m.raw(), n.raw(), c, check_larsen(w, m, n, c)});
            }
            return rows;
        },
        sink);
}

} // namespace kloss3

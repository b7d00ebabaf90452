// order.hpp -- well-quasi-order machinery: finite bases of upward-closed
// sets and the backward-coverability saturation engine.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace bncover {

enum class Verdict { Coverable, Uncoverable, LimitExceeded };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Coverable: return "COVERABLE";
        case Verdict::Uncoverable: return "UNCOVERABLE";
        case Verdict::LimitExceeded: return "LIMIT_EXCEEDED";
    }
    return "UNKNOWN";
}

// Finite antichain of minimal elements denoting the upward-closed set
// of everything that dominates at least one element. An empty element
// list denotes the empty set.
template <typename Config>
struct UpwardBasis {
    std::vector<Config> elements;

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
    auto begin() const { return elements.begin(); }
    auto end() const { return elements.end(); }
};

// Reduces an arbitrary finite element list to an antichain with the same
// upward closure. Keeps the first occurrence among mutually dominating
// elements, in input order.
template <typename Config, typename Leq>
UpwardBasis<Config> minimize(const std::vector<Config>& candidates, Leq&& leq) {
    std::vector<Config> kept;
    for (const Config& c : candidates) {
        bool dominated = false;
        for (const Config& k : kept) {
            if (leq(k, c)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        std::erase_if(kept, [&](const Config& k) { return leq(c, k); });
        kept.push_back(c);
    }
    return UpwardBasis<Config>{std::move(kept)};
}

// True iff c lies in the upward closure of the basis.
template <typename Config, typename Leq>
bool basis_contains(const UpwardBasis<Config>& basis, const Config& c, Leq&& leq) {
    for (const Config& b : basis.elements) {
        if (leq(b, c)) return true;
    }
    return false;
}

// True iff the upward closure of a is included in that of b.
template <typename Config, typename Leq>
bool basis_subsumed(const UpwardBasis<Config>& a, const UpwardBasis<Config>& b, Leq&& leq) {
    for (const Config& x : a.elements) {
        if (!basis_contains(b, x, leq)) return false;
    }
    return true;
}

// A transition system handed to the backward engine. The order must be a
// decidable wqo, and it must be compatible with the steps: whenever
// s1 <= t1 and s1 has a one-step successor s2 under some label, t1 has a
// successor t2 under the same label with s2 <= t2. pre_basis(c) must
// return a finite basis of the one-step predecessors of the upward
// closure of c; init_covers(b) must hold iff some initial configuration
// dominates b.
template <typename Config>
struct Wsts {
    std::function<bool(const Config&, const Config&)> leq;
    std::function<std::vector<Config>(const Config&)> pre_basis;
    std::function<bool(const Config&)> init_covers;
};

template <typename Config>
struct CoverabilityResult {
    Verdict verdict = Verdict::Uncoverable;
    std::optional<Config> witness;  // basis element dominated by an initial configuration
    std::size_t iterations = 0;
    std::size_t peak_basis_size = 0;
    UpwardBasis<Config> basis;  // basis held when the engine stopped
};

// Backward coverability by saturation. Starting from the target basis,
// repeatedly joins in the pre-basis of every element and re-minimizes
// until no new configuration appears. Every element of each intermediate
// basis is tested against the initial configurations, so a positive
// verdict may be returned before full saturation. The optional iteration
// cap turns an unfinished run into LimitExceeded; it is never a verdict.
template <typename Config>
CoverabilityResult<Config> backward_coverability(
    const Wsts<Config>& sys, UpwardBasis<Config> target,
    std::optional<std::size_t> max_iterations = std::nullopt,
    const std::type_identity_t<std::function<void(const UpwardBasis<Config>&)>>& observer = {}) {
    CoverabilityResult<Config> res;
    UpwardBasis<Config> current = std::move(target);
    res.peak_basis_size = current.size();
    if (observer) observer(current);
    for (const Config& b : current.elements) {
        if (sys.init_covers(b)) {
            res.verdict = Verdict::Coverable;
            res.witness = b;
            res.basis = std::move(current);
            return res;
        }
    }
    std::size_t iter = 0;
    for (;;) {
        if (max_iterations && iter >= *max_iterations) {
            res.verdict = Verdict::LimitExceeded;
            res.iterations = iter;
            res.basis = std::move(current);
            return res;
        }
        std::vector<Config> candidates = current.elements;
        for (const Config& b : current.elements) {
            std::vector<Config> pres = sys.pre_basis(b);
            candidates.insert(candidates.end(), std::make_move_iterator(pres.begin()),
                              std::make_move_iterator(pres.end()));
        }
        UpwardBasis<Config> next = minimize(candidates, sys.leq);
        ++iter;
        if (observer) observer(next);
        if (next.size() > res.peak_basis_size) res.peak_basis_size = next.size();
        for (const Config& b : next.elements) {
            if (sys.init_covers(b)) {
                res.verdict = Verdict::Coverable;
                res.witness = b;
                res.iterations = iter;
                res.basis = std::move(next);
                return res;
            }
        }
        if (basis_subsumed(next, current, sys.leq)) {
            res.verdict = Verdict::Uncoverable;
            res.iterations = iter;
            res.basis = std::move(next);
            return res;
        }
        current = std::move(next);
    }
}

}  // namespace bncover

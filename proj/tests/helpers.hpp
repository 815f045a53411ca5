#pragma once

#include <initializer_list>
#include <optional>
#include <utility>

#include "oracle.hpp"
#include "sympmat/core.hpp"
#include "sympmat/error.hpp"
#include "sympmat/matroid.hpp"

// Basis sets written with signed labels, e.g. signed_bases(2, {{1, 2}, {-1, -2}}).
inline sympmat::BasisSet signed_bases(int n, std::initializer_list<std::pair<int, int>> pairs) {
    sympmat::GroundSet e{n};
    sympmat::BasisSet out;
    for (auto [a, b] : pairs) out.push_back(sympmat::make_pair(e.from_signed(a), e.from_signed(b)));
    return sympmat::normalize(std::move(out));
}

inline sympmat::Bag signed_bag(int n, std::initializer_list<int> labels) {
    sympmat::GroundSet e{n};
    sympmat::Bag out;
    for (int l : labels) out.push_back(e.from_signed(l));
    return out;
}

inline oracle::PairSet to_oracle(const sympmat::BasisSet& b) {
    oracle::PairSet out;
    for (const auto& p : b) out.insert({p.lo, p.hi});
    return out;
}

inline sympmat::BasisSet from_oracle(const oracle::PairSet& b) {
    sympmat::BasisSet out;
    for (auto [a, c] : b) out.push_back(sympmat::Pair{a, c});
    return out;
}

// Kind of the sympmat::Error thrown by f, or nullopt when nothing is thrown.
template <class F>
std::optional<sympmat::ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const sympmat::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

#pragma once

#include <initializer_list>

#include "torkit/numeric.hpp"

namespace th {

inline torkit::IMat im(std::initializer_list<std::initializer_list<long>> rows) {
    torkit::IMat m;
    for (auto& r : rows) {
        torkit::IVec v;
        for (long x : r) v.push_back(torkit::Int(x));
        m.push_back(v);
    }
    return m;
}

inline torkit::IVec iv(std::initializer_list<long> xs) {
    torkit::IVec v;
    for (long x : xs) v.push_back(torkit::Int(x));
    return v;
}

// Rationals written as strings, e.g. qv({"1/2", "3"}).
inline torkit::QVec qv(std::initializer_list<const char*> xs) {
    torkit::QVec v;
    for (auto* x : xs) v.push_back(torkit::parse_rat(x));
    return v;
}

}  // namespace th

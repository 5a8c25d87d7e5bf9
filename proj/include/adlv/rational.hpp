#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace adlv {

using Rat = boost::rational<long long>;
using Vec = std::vector<Rat>;   // point/vector in the pairing chart
using IVec = std::vector<long long>;

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long long rat_floor(const Rat& r) {
    return floor_div(r.numerator(), r.denominator());
}

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::string to_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

inline Vec to_vec(const IVec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

}  // namespace adlv

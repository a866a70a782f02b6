/*
   Copyright 2026 The polymask Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYMASK_TEST_SUPPORT_HPP
#define POLYMASK_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "polymask/linalg.hpp"
#include "polymask/polynomial.hpp"

namespace polymask::test {

// Every generator takes the caller's engine; test cases seed their own
// engine with a fixed constant so failures replay deterministically.

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    while (true) {
        Rational r = random_rational(rng, num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t degree, long bound) {
    std::vector<Rational> coeffs;
    coeffs.reserve(degree + 1);
    for (std::size_t k = 0; k < degree; ++k) {
        coeffs.push_back(random_rational(rng, bound, bound));
    }
    coeffs.push_back(random_nonzero_rational(rng, bound, bound));
    return Polynomial(std::move(coeffs));
}

inline std::vector<std::int64_t> random_distinct_shifts(std::mt19937_64& rng, std::size_t count,
                                                        std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::unordered_set<std::int64_t> seen;
    std::vector<std::int64_t> shifts;
    shifts.reserve(count);
    while (shifts.size() < count) {
        const std::int64_t s = dist(rng);
        if (seen.insert(s).second) shifts.push_back(s);
    }
    return shifts;
}

inline std::vector<Rational> random_distinct_nodes(std::mt19937_64& rng, std::size_t count,
                                                   long num_bound, long den_bound) {
    std::vector<Rational> nodes;
    nodes.reserve(count);
    while (nodes.size() < count) {
        Rational candidate = random_rational(rng, num_bound, den_bound);
        bool fresh = true;
        for (const Rational& existing : nodes) {
            if (existing == candidate) {
                fresh = false;
                break;
            }
        }
        if (fresh) nodes.push_back(std::move(candidate));
    }
    return nodes;
}

inline Vec random_vector(std::mt19937_64& rng, std::size_t size, long bound) {
    Vec v;
    v.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        v.push_back(random_rational(rng, bound, bound));
    }
    return v;
}

inline std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace polymask::test

#endif

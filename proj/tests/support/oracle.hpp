#pragma once

// Slow, direct reference computations used to freeze expected values. They
// work on plain label sets and share no code with the library beyond the
// Integer type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "localh/polynomial.hpp"
#include "localh/subdivision.hpp"

namespace oracle {

using localh::Integer;
using Set = std::set<std::string>;
using Coeffs = std::vector<Integer>;

inline Coeffs trim(Coeffs c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

inline Integer choose(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::set<Set> all_faces(const std::vector<Set>& facets) {
    std::set<Set> out;
    for (const auto& f : facets) {
        std::vector<std::string> v(f.begin(), f.end());
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << v.size()); ++m) {
            Set s;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (m >> i & 1u) s.insert(v[i]);
            out.insert(s);
        }
    }
    return out;
}

// f_{-1}..f_{d-1} of a face set that includes the empty face.
inline Coeffs f_of(const std::set<Set>& faces, std::size_t d) {
    Coeffs f(d + 1, 0);
    for (const auto& s : faces) f.at(s.size()) += 1;
    return f;
}

// h-vector from the f-vector by the (t-1) substitution: Σ h_i x^i = Σ f_{i-1} x^i (1-x)^{d-i}.
inline Coeffs h_of(const Coeffs& f) {
    const std::size_t d = f.size() - 1;
    Coeffs h(d + 1, 0);
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t k = 0; k <= d - i; ++k)
            h[i + k] += f[i] * choose(static_cast<long long>(d - i), static_cast<long long>(k)) * ((k % 2) ? -1 : 1);
    return h;
}

inline Coeffs h_of_facets(const std::vector<Set>& facets) {
    std::size_t d = 0;
    for (const auto& f : facets) d = std::max(d, f.size());
    return trim(h_of(f_of(all_faces(facets), d)));
}

inline std::vector<Set> to_sets(const std::vector<localh::LabelSet>& faces) {
    std::vector<Set> out;
    for (const auto& f : faces) out.emplace_back(f.begin(), f.end());
    return out;
}

// Local h-polynomial straight from the alternating-sum definition, reading
// carriers off the labeled form.
inline Coeffs local_h(const localh::Subdivision& s) {
    const localh::LabeledSubdivision l = s.to_labeled();
    const std::vector<std::string> v = s.base().labels();
    const std::size_t d = v.size();
    Coeffs total(d + 1, 0);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
        Set f;
        for (std::size_t i = 0; i < d; ++i)
            if (m >> i & 1u) f.insert(v[i]);
        std::set<Set> faces = {Set{}};
        for (const auto& [face, carrier] : l.carrier)
            if (std::includes(f.begin(), f.end(), carrier.begin(), carrier.end())) faces.insert(Set(face.begin(), face.end()));
        const Coeffs h = h_of(f_of(faces, f.size()));
        const bool negative = (d - f.size()) % 2;
        for (std::size_t i = 0; i < h.size(); ++i) total[i] += negative ? -h[i] : h[i];
    }
    return trim(total);
}

// A(n,k) = Σ_j (-1)^j C(n+1,j) (k+1-j)^n.
inline Integer eulerian(long long n, long long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    Integer sum = 0;
    for (long long j = 0; j <= k + 1; ++j) {
        Integer p = 1;
        for (long long t = 0; t < n; ++t) p *= (k + 1 - j);
        sum += ((j % 2) ? -1 : 1) * choose(n + 1, j) * p;
    }
    return sum;
}

// Excedance polynomial of derangements, by depth-first construction.
inline Coeffs derangements(int d) {
    Coeffs out(static_cast<std::size_t>(std::max(d, 1)), 0);
    if (d == 0) return {1};
    std::vector<int> image(static_cast<std::size_t>(d), -1);
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    std::function<void(int, int)> go = [&](int i, int exc) {
        if (i == d) {
            out[static_cast<std::size_t>(exc)] += 1;
            return;
        }
        for (int j = 0; j < d; ++j) {
            if (used[static_cast<std::size_t>(j)] || j == i) continue;
            used[static_cast<std::size_t>(j)] = true;
            go(i + 1, exc + (j > i));
            used[static_cast<std::size_t>(j)] = false;
        }
    };
    go(0, 0);
    return trim(out);
}

inline localh::Polynomial poly(const Coeffs& c) { return localh::Polynomial(c); }

// Flag f-numbers of a graded poset by brute force over element subsets.
// elements: (id, dim); less(a, b) is the strict order.
inline std::map<std::set<int>, Integer> flag_f(const std::vector<std::pair<std::string, int>>& elements,
                                               const std::function<bool(std::size_t, std::size_t)>& less) {
    std::map<std::set<int>, Integer> f;
    const std::size_t n = elements.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1u) chosen.push_back(i);
        bool chain = true;
        for (std::size_t a = 0; a < chosen.size() && chain; ++a)
            for (std::size_t b = a + 1; b < chosen.size() && chain; ++b)
                chain = less(chosen[a], chosen[b]) || less(chosen[b], chosen[a]);
        if (!chain) continue;
        std::set<int> s;
        for (auto i : chosen) s.insert(elements[i].second + 1);
        f[s] += 1;
    }
    return f;
}

}  // namespace oracle

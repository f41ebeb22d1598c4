#include "localh/permstats.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "localh/error.hpp"

namespace localh {

namespace {

using Histogram = std::vector<std::uint64_t>;

void check_bound(std::size_t d, std::size_t bound) {
    bound = std::min(bound, kHardEnumerationLimit);
    if (d > bound)
        fail(ErrorKind::EnumerationBound, "enumeration over S_" + std::to_string(d) +
                                              " exceeds the bound " + std::to_string(bound) +
                                              " (set LOCALH_MAX_ENUM, at most " +
                                              std::to_string(kHardEnumerationLimit) + ")");
}

std::size_t descents(const std::vector<int>& p) {
    std::size_t n = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) n += p[i] > p[i + 1];
    return n;
}

// Returns the excedance count, or -1 when p has a fixed point.
int excedances(const std::vector<int>& p) {
    int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == static_cast<int>(i)) return -1;
        n += p[i] > static_cast<int>(i);
    }
    return n;
}

// Histogram over permutations with p[0] == first, in lexicographic order.
template <class Stat>
Histogram enumerate_prefix(std::size_t d, int first, Stat stat) {
    Histogram h(d + 1, 0);
    std::vector<int> p;
    p.push_back(first);
    for (int v = 0; v < static_cast<int>(d); ++v)
        if (v != first) p.push_back(v);
    do {
        const int s = stat(p);
        if (s >= 0) ++h[static_cast<std::size_t>(s)];
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return h;
}

template <class Stat>
PermTable enumerate(std::size_t d, Stat stat) {
    PermTable table{d, {}};
    if (d == 0) {
        table.histogram[0] = 1;
        return table;
    }
    Histogram total(d + 1, 0);
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers > 1 && d >= 8) {
        std::vector<std::future<Histogram>> parts;
        for (int first = 0; first < static_cast<int>(d); ++first)
            parts.push_back(std::async(std::launch::async, [=] { return enumerate_prefix(d, first, stat); }));
        for (auto& part : parts) {
            const Histogram h = part.get();
            for (std::size_t i = 0; i <= d; ++i) total[i] += h[i];
        }
    } else {
        for (int first = 0; first < static_cast<int>(d); ++first) {
            const Histogram h = enumerate_prefix(d, first, stat);
            for (std::size_t i = 0; i <= d; ++i) total[i] += h[i];
        }
    }
    for (std::size_t i = 0; i <= d; ++i)
        if (total[i] != 0) table.histogram[i] = total[i];
    return table;
}

}  // namespace

Integer PermTable::total() const {
    Integer sum = 0;
    for (const auto& [value, count] : histogram) sum += count;
    return sum;
}

Polynomial PermTable::polynomial() const {
    Polynomial p;
    for (const auto& [value, count] : histogram) p += Polynomial::monomial(value, count);
    return p;
}

std::size_t enumeration_bound() {
    const char* env = std::getenv("LOCALH_MAX_ENUM");
    if (env == nullptr || *env == '\0') return 9;
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0') fail(ErrorKind::InvalidArgument, std::string("LOCALH_MAX_ENUM is not a number: ") + env);
    if (value > kHardEnumerationLimit)
        fail(ErrorKind::EnumerationBound,
             "LOCALH_MAX_ENUM=" + std::string(env) + " exceeds the hard limit " + std::to_string(kHardEnumerationLimit));
    return value;
}

PermTable descent_table(std::size_t d, std::size_t bound) {
    check_bound(d, bound);
    return enumerate(d, [](const std::vector<int>& p) { return static_cast<int>(descents(p)); });
}

PermTable excedance_table(std::size_t d, std::size_t bound) {
    check_bound(d, bound);
    return enumerate(d, excedances);
}

Polynomial eulerian_polynomial(std::size_t d, std::size_t bound) { return descent_table(d, bound).polynomial(); }

Polynomial derangement_enum(std::size_t d, std::size_t bound) { return excedance_table(d, bound).polynomial(); }

Polynomial derangement_recurrence(std::size_t d) {
    static std::mutex mutex;
    static std::vector<Polynomial> memo = {Polynomial{1}, Polynomial{}};
    std::lock_guard lock(mutex);
    while (memo.size() <= d) {
        const auto n = static_cast<long long>(memo.size());
        Polynomial next;
        for (long long k = 0; k <= n - 2; ++k)
            next += binomial(n, k) * memo[static_cast<std::size_t>(k)] * geometric_block(1, n - 1 - k);
        memo.push_back(std::move(next));
    }
    return memo[d];
}

}  // namespace localh

#include "burn/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "burn/errors.hpp"

namespace burn {

BudgetSet::BudgetSet(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_)
        if (v < 1) throw std::invalid_argument("budgets must be positive");
    std::sort(values_.begin(), values_.end());
}

BudgetSet BudgetSet::consecutive(int k) {
    if (k < 1) throw std::invalid_argument("budget count must be positive");
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    return BudgetSet(std::move(v));
}

long long BudgetSet::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0LL);
}

bool BudgetSet::is_distinct() const {
    return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

BudgetSet BudgetSet::without_index(int i) const {
    std::vector<int> v = values_;
    v.erase(v.begin() + i);
    BudgetSet out;
    out.values_ = std::move(v);  // stays sorted
    return out;
}

BudgetSet BudgetSet::prefix(int count) const {
    BudgetSet out;
    out.values_.assign(values_.begin(), values_.begin() + count);
    return out;
}

std::uint64_t isqrt(std::uint64_t x) {
    if (x < 2) return x;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

int ceil_sqrt(std::uint64_t x) {
    std::uint64_t r = isqrt(x);
    return static_cast<int>(r * r == x ? r : r + 1);
}

int burning_bound(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    // Smallest t with (4t+3)^2 >= m, via the ceiling square root of m.
    std::uint64_t m = 24ULL * static_cast<std::uint64_t>(n) + 33;
    int s = ceil_sqrt(m);
    return s / 4;  // == ceil((s - 3) / 4) since s >= 3
}

int simple_burning_bound(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    int k = 1;
    while ((static_cast<long long>(k) * k + 3LL * k - 2) / 2 < n) ++k;
    return k;
}

long long distinct_slack(int k) {
    if (k < 1) throw std::invalid_argument("budget count must be positive");
    long long kk = k;
    return (kk * kk - 3 * kk + 2) / 6;
}

long long multiset_capacity(const BudgetSet& a) {
    if (a.empty()) throw std::invalid_argument("empty budget set");
    return a.sum() + a.largest() - 1;
}

long long distinct_capacity(const BudgetSet& a) {
    if (a.empty()) throw std::invalid_argument("empty budget set");
    if (!a.is_distinct()) throw std::invalid_argument("distinct budgets required");
    return a.sum() + a.largest() - 1 + distinct_slack(a.size());
}

long long consecutive_capacity(int k) {
    if (k < 1) throw std::invalid_argument("budget count must be positive");
    long long kk = k;
    return (2 * kk * kk + 3 * kk - 2) / 3;
}

int consecutive_budget_count(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    int k = 1;
    while (consecutive_capacity(k) < n) ++k;
    return k;
}

int select_split_budget(const BudgetSet& a) {
    if (a.empty()) throw std::invalid_argument("empty budget set");
    if (!a.is_distinct()) throw std::invalid_argument("distinct budgets required");
    const int j = a.size() / 3;
    const auto& v = a.values();
    for (int i = 0; i < a.size(); ++i)
        if (v[i] >= 2 * j && v[i] <= v.back() - j) return i;
    internal_check(false, "split budget selection failed");
    return -1;
}

}  // namespace burn

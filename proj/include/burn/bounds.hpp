#pragma once

#include <cstdint>
#include <vector>

namespace burn {

// Sorted multiset of positive integer budgets a_1 <= ... <= a_k. Budget a
// buys a ball of radius a-1 in a burning cover.
class BudgetSet {
  public:
    BudgetSet() = default;
    explicit BudgetSet(std::vector<int> values);  // sorts; rejects values < 1
    static BudgetSet consecutive(int k);          // {1, 2, ..., k}

    const std::vector<int>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int smallest() const { return values_.front(); }
    int largest() const { return values_.back(); }
    long long sum() const;
    bool is_distinct() const;  // strictly increasing

    BudgetSet without_index(int i) const;
    BudgetSet prefix(int count) const;  // the smallest `count` budgets

  private:
    std::vector<int> values_;
};

std::uint64_t isqrt(std::uint64_t x);  // floor square root
int ceil_sqrt(std::uint64_t x);

// Headline upper bound on the burning number by order: the smallest t with
// (4t+3)^2 >= 24n+33, i.e. ceil((-3+sqrt(24n+33))/4) in exact arithmetic.
int burning_bound(int n);

// Weaker bound from plain consecutive budgets: min k with (k^2+3k-2)/2 >= n.
int simple_burning_bound(int n);

// Extra coverable order gained by distinct budgets:
// floor((k^2-3k+2)/6) == sum_{i=1..k} floor((i-1)/3).
long long distinct_slack(int k);

// Largest tree order guaranteed coverable by the budget multiset: sum + max - 1.
long long multiset_capacity(const BudgetSet& a);

// Same for strictly increasing budgets: sum + max - 1 + distinct_slack(k).
long long distinct_capacity(const BudgetSet& a);

// distinct_capacity of {1..k}: floor((2k^2+3k-2)/3).
long long consecutive_capacity(int k);

// Smallest k whose consecutive capacity reaches n.
int consecutive_budget_count(int n);

// Index of the smallest budget a_i with 2j <= a_i <= max - j, j = floor(size/3).
// Existence is guaranteed for distinct positive budgets; failure is a bug.
int select_split_budget(const BudgetSet& a);

}  // namespace burn

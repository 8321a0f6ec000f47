#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weakeq/action.hpp"
#include "weakeq/group_window.hpp"
#include "weakeq/partition.hpp"
#include "weakeq/rational.hpp"

namespace weakeq {

/// Partition moment matrix: entry (p,q,r) is the mass of atoms in class r
/// whose image under the inverse of the p-th window word lies in class q
/// (the overlap mass of the p-th word's translate of class q with class r).
/// Indices are 0-based here; entry (0,q,r) belongs to the identity word.
/// Entries are exact; dedup and equality are exact as well.
struct MomentMatrix {
    int n = 0;
    int k = 0;
    std::vector<Rat> entries; // size n*k*k, index (p*k + q)*k + r

    const Rat& at(int p, int q, int r) const { return entries[(p * k + q) * k + r]; }
    Rat& at(int p, int q, int r) { return entries[(p * k + q) * k + r]; }

    std::vector<double> to_doubles() const;

    bool operator==(const MomentMatrix& o) const {
        return n == o.n && k == o.k && entries == o.entries;
    }
    bool operator<(const MomentMatrix& o) const;
};

/// Cloud enumeration strategy.
struct CloudStrategy {
    enum class Kind { Exhaustive, Random, LocalSearch };
    Kind kind = Kind::Exhaustive;
    std::uint64_t samples = 1000; // Random
    std::uint64_t starts = 8;     // LocalSearch
    std::uint64_t seed = 0;       // Random / LocalSearch

    static CloudStrategy exhaustive() { return {}; }
    static CloudStrategy random(std::uint64_t samples, std::uint64_t seed);
    static CloudStrategy local_search(std::uint64_t starts, std::uint64_t seed);
    std::string note() const;
};

/// Default cap on k^m for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultPartitionBudget = 1000000;

/// Finite set of moment matrices over atom partitions, deduplicated exactly
/// and sorted; each point keeps the first witness partition that produced it.
struct MomentCloud {
    std::vector<MomentMatrix> points;
    std::vector<Partition> witnesses;          // parallel to points
    std::vector<std::vector<double>> points_d; // parallel to points
    int n = 0;
    int k = 0;
    bool exhaustive = false;
    std::string strategy_note;
    std::string action_label;
};

MomentMatrix moment_matrix(const FiniteAction& a, const GroupWindow& window,
                           const Partition& partition, int n, int k);

MomentCloud moment_cloud(const FiniteAction& a, const GroupWindow& window, int n, int k,
                         const CloudStrategy& strategy = CloudStrategy::exhaustive(),
                         std::uint64_t partition_budget = kDefaultPartitionBudget);

/// Exhaustive cloud of refine(a, q), computed without enumerating the k^(mq)
/// labelings: a labeling of the refined space restricts to one labeling of
/// each of the q copies, so the cloud is exactly the set of q-multiset
/// averages of cloud(a). Agrees with brute-force enumeration (tested).
MomentCloud refined_cloud(const FiniteAction& a, const GroupWindow& window, int n, int k, int q,
                          std::uint64_t partition_budget = kDefaultPartitionBudget);

enum class HausdorffMode { Points, Hulls };

/// Hausdorff distance between clouds with matching (n,k).
/// Points mode: sup-metric on entries, max of the two one-sided sup-min
/// distances. Hulls mode: max over the vertices of either cloud of the
/// Euclidean distance to the other cloud's convex hull.
double cloud_hausdorff(const MomentCloud& A, const MomentCloud& B, HausdorffMode mode);

/// One-sided variant: sup over points of `from` of the distance to `to`
/// (to's point set in Points mode, to's hull in Hulls mode).
double cloud_one_sided(const MomentCloud& from, const MomentCloud& to, HausdorffMode mode,
                       std::size_t* arg_max = nullptr);

struct MetricResult {
    double value = 0.0;
    double truncation_bound = 0.0;
};

/// Truncated series pseudometric: sum of 2^-(n+k) * d_H over 2 <= n+k <= cut,
/// points mode. truncation_bound = sum over n+k > cut of 2^-(n+k)
/// = (cut+1)/2^cut (every Hausdorff term is at most 1).
MetricResult metric_d(const FiniteAction& a, const FiniteAction& b, int cut,
                      const CloudStrategy& strategy = CloudStrategy::exhaustive(),
                      std::uint64_t partition_budget = kDefaultPartitionBudget);

/// Stable variant: identical series but each term uses hulls mode, so the value
/// vanishes whenever the clouds have equal convex hulls (equal types do).
MetricResult metric_d_stable(const FiniteAction& a, const FiniteAction& b, int cut,
                             const CloudStrategy& strategy = CloudStrategy::exhaustive(),
                             std::uint64_t partition_budget = kDefaultPartitionBudget);

struct ContainmentResult {
    double defect = 0.0;
    Partition witness; // partition of `a` achieving the defect
};

/// One-sided containment defect of a in b at (n,k): sup over a's cloud of
/// the distance to b's cloud (points) or hull (hulls), with the witness
/// partition attaining it. defect <= eps certifies the (n,k,eps) instance
/// of weak containment of a in b.
ContainmentResult containment_defect(const FiniteAction& a, const FiniteAction& b,
                                     const GroupWindow& window, int n, int k, HausdorffMode mode,
                                     const CloudStrategy& strategy = CloudStrategy::exhaustive(),
                                     std::uint64_t partition_budget = kDefaultPartitionBudget);

/// Smallest radius whose window holds at least `words` words.
int radius_for_words(int num_generators, std::uint64_t words);

/// Exact tail bound (cut+1)/2^cut of the series.
double truncation_tail(int cut);

} // namespace weakeq

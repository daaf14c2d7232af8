#pragma once

// Internal enumeration engine shared by the oracle and the enumeration-only
// operations (robustness). A model's plausible profiles are walked either as
// an explicit entry list (joint) or as the mixed-radix product of per-voter
// supports (lottery, candidate probability). Each visit hands the body the
// exact profile probability and the per-candidate approval scores.
//
// Parallel runs split the index space into fixed blocks that are reduced in
// block order. All accumulators are exact rationals, so serial and parallel
// results are identical (covered by tests).

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "abcu/core.hpp"
#include "abcu/errors.hpp"
#include "abcu/models.hpp"
#include "abcu/oracle.hpp"

namespace abcu::detail {

struct Axis {
    std::vector<Rational> probability;
    std::vector<CandidateSet> set;
};

class ProfileSpace {
public:
    // Keeps a reference to `model` for joint models; callers hold the model
    // alive for the lifetime of the space (all uses are function-local).
    static ProfileSpace make(const UncertaintyModel& model, const EnumerationLimits& limits,
                             const std::string& what);

    std::uint64_t size() const { return size_; }
    const Instance& instance() const { return instance_; }

    // Visits profile indices [begin, end) in increasing order.
    // body(probability, scores): scores is 1-based over candidates and only
    // valid during the call.
    template <class Body>
    void run(std::uint64_t begin, std::uint64_t end, Body&& body) const {
        if (begin >= end) return;
        if (entries_ != nullptr) {
            std::vector<int> scores;
            for (std::uint64_t r = begin; r < end; ++r) {
                const auto& entry = (*entries_)[static_cast<std::size_t>(r)];
                scores.assign(static_cast<std::size_t>(instance_.candidates) + 1, 0);
                for (const auto& approvals : entry.profile)
                    for (int c : approvals) ++scores[static_cast<std::size_t>(c)];
                body(entry.probability, scores);
            }
            return;
        }

        // Mixed-radix odometer with the last voter in the fastest position;
        // scores and the probability product are updated incrementally.
        const std::size_t n = axes_.size();
        std::vector<std::size_t> pick(n);
        std::uint64_t rem = begin;
        for (std::size_t i = n; i-- > 0;) {
            pick[i] = static_cast<std::size_t>(rem % axes_[i].set.size());
            rem /= axes_[i].set.size();
        }
        std::vector<int> scores(static_cast<std::size_t>(instance_.candidates) + 1, 0);
        Rational probability(1);
        for (std::size_t i = 0; i < n; ++i) {
            probability *= axes_[i].probability[pick[i]];
            for (int c : axes_[i].set[pick[i]]) ++scores[static_cast<std::size_t>(c)];
        }

        for (std::uint64_t index = begin;;) {
            body(probability, scores);
            if (++index >= end) break;
            std::size_t axis = n;
            while (axis-- > 0) {
                const auto& ax = axes_[axis];
                std::size_t old = pick[axis];
                for (int c : ax.set[old]) --scores[static_cast<std::size_t>(c)];
                probability /= ax.probability[old];
                std::size_t next = old + 1 < ax.set.size() ? old + 1 : 0;
                pick[axis] = next;
                probability *= ax.probability[next];
                for (int c : ax.set[next]) ++scores[static_cast<std::size_t>(c)];
                if (next != 0) break;
            }
        }
    }

private:
    Instance instance_;
    std::uint64_t size_ = 0;
    std::vector<Axis> axes_;
    const std::vector<JointEntry>* entries_ = nullptr;
};

bool run_parallel(Exec exec, std::uint64_t size);

// Blocked deterministic reduction. make_acc() builds a fresh accumulator,
// body(acc, probability, scores) folds one profile in, merge(total, part)
// combines block results in block order.
template <class Acc, class MakeAcc, class Body, class Merge>
Acc blocked_reduce(const ProfileSpace& space, Exec exec, MakeAcc make_acc, Body body,
                   Merge merge) {
    const std::uint64_t size = space.size();
    Acc total = make_acc();
    if (!run_parallel(exec, size)) {
        space.run(0, size, [&](const Rational& probability, const std::vector<int>& scores) {
            body(total, probability, scores);
        });
        return total;
    }

#ifdef _OPENMP
    const std::uint64_t max_blocks = 8 * static_cast<std::uint64_t>(omp_get_max_threads());
    const std::uint64_t blocks = std::min<std::uint64_t>(std::max<std::uint64_t>(max_blocks, 1),
                                                         std::max<std::uint64_t>(size, 1));
    std::vector<Acc> parts;
    parts.reserve(static_cast<std::size_t>(blocks));
    for (std::uint64_t b = 0; b < blocks; ++b) parts.push_back(make_acc());

#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        const std::uint64_t begin = size * static_cast<std::uint64_t>(b) / blocks;
        const std::uint64_t end = size * (static_cast<std::uint64_t>(b) + 1) / blocks;
        auto& acc = parts[static_cast<std::size_t>(b)];
        space.run(begin, end, [&](const Rational& probability, const std::vector<int>& scores) {
            body(acc, probability, scores);
        });
    }
    for (auto& part : parts) merge(total, part);
#endif
    return total;
}

}  // namespace abcu::detail

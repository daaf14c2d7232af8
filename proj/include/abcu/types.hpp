#pragma once

#include <string>
#include <vector>

namespace abcu {

// Candidates and voters are 1-based indices, matching the instance files.

class CandidateSet {
public:
    CandidateSet() = default;
    explicit CandidateSet(std::vector<int> members);  // sorts and deduplicates
    static CandidateSet singleton(int c) { return CandidateSet({c}); }

    bool contains(int c) const;
    int intersection_size(const CandidateSet& other) const;

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<int>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    std::string to_string() const;  // "{2,3}"

    bool operator==(const CandidateSet&) const = default;
    bool operator<(const CandidateSet& o) const { return members_ < o.members_; }

private:
    std::vector<int> members_;
};

// One approval set per voter.
using ApprovalProfile = std::vector<CandidateSet>;

struct Instance {
    int voters = 0;          // n
    int candidates = 0;      // m
    int committee_size = 0;  // k

    bool operator==(const Instance&) const = default;
};

// Throw ValidationError when the named invariant fails.
void validate_instance(const Instance& inst);
void validate_profile(const Instance& inst, const ApprovalProfile& profile);
void validate_committee(const Instance& inst, const CandidateSet& committee);
void validate_candidate(const Instance& inst, int candidate);

std::string to_string(const ApprovalProfile& profile);

}  // namespace abcu

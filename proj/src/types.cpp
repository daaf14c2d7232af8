#include "abcu/types.hpp"

#include <algorithm>

#include "abcu/errors.hpp"

namespace abcu {

CandidateSet::CandidateSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool CandidateSet::contains(int c) const {
    return std::binary_search(members_.begin(), members_.end(), c);
}

int CandidateSet::intersection_size(const CandidateSet& other) const {
    int count = 0;
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            ++count;
            ++a;
            ++b;
        }
    }
    return count;
}

std::string CandidateSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(members_[i]);
    }
    return out + "}";
}

void validate_instance(const Instance& inst) {
    if (inst.voters < 1) throw ValidationError("voter count must be positive");
    if (inst.candidates < 1) throw ValidationError("candidate count must be positive");
    if (inst.committee_size < 1 || inst.committee_size > inst.candidates)
        throw ValidationError("committee size must satisfy 1 <= k <= m");
}

void validate_profile(const Instance& inst, const ApprovalProfile& profile) {
    if (static_cast<int>(profile.size()) != inst.voters)
        throw ValidationError("profile has " + std::to_string(profile.size()) +
                              " approval sets, expected " + std::to_string(inst.voters));
    for (std::size_t i = 0; i < profile.size(); ++i) {
        for (int c : profile[i]) {
            if (c < 1 || c > inst.candidates)
                throw ValidationError("voter " + std::to_string(i + 1) + " approves candidate " +
                                      std::to_string(c) + " out of range 1.." +
                                      std::to_string(inst.candidates));
        }
    }
}

void validate_committee(const Instance& inst, const CandidateSet& committee) {
    if (static_cast<int>(committee.size()) != inst.committee_size)
        throw ValidationError("committee " + committee.to_string() + " has size " +
                              std::to_string(committee.size()) + ", expected k = " +
                              std::to_string(inst.committee_size));
    for (int c : committee) {
        if (c < 1 || c > inst.candidates)
            throw ValidationError("committee member " + std::to_string(c) + " out of range 1.." +
                                  std::to_string(inst.candidates));
    }
}

void validate_candidate(const Instance& inst, int candidate) {
    if (candidate < 1 || candidate > inst.candidates)
        throw ValidationError("candidate " + std::to_string(candidate) + " out of range 1.." +
                              std::to_string(inst.candidates));
}

std::string to_string(const ApprovalProfile& profile) {
    std::string out = "(";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (i) out += ",";
        out += profile[i].to_string();
    }
    return out + ")";
}

}  // namespace abcu

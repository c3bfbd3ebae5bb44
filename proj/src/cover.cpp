#include "pou/cover.hpp"

#include <algorithm>
#include <utility>

#include "pou/error.hpp"

namespace pou {

Cover::Cover(std::vector<std::string> names, std::vector<std::vector<int>> members,
             int point_count)
    : names_(std::move(names)), members_(std::move(members)), point_count_(point_count) {
    membership_.assign(members_.size() * static_cast<std::size_t>(point_count_), 0);
    for (std::size_t a = 0; a < members_.size(); ++a) {
        for (int p : members_[a]) {
            membership_[a * static_cast<std::size_t>(point_count_) +
                        static_cast<std::size_t>(p)] = 1;
        }
    }
}

Cover Cover::build(std::vector<std::string> names, std::vector<std::vector<int>> members,
                   int point_count, bool allow_empty) {
    if (point_count <= 0) Error::raise(ErrorKind::BadParameter, "cover needs a nonempty space");
    if (members.empty()) Error::raise(ErrorKind::NotACover, "cover has no members");
    if (names.size() != members.size()) {
        Error::raise(ErrorKind::BadParameter, "cover names and members differ in length");
    }
    for (std::size_t a = 0; a < names.size(); ++a) {
        for (std::size_t b = a + 1; b < names.size(); ++b) {
            if (names[a] == names[b]) {
                Error::raise(ErrorKind::BadParameter, "duplicate cover index '" + names[a] + "'");
            }
        }
    }

    std::vector<char> covered(static_cast<std::size_t>(point_count), 0);
    for (std::size_t a = 0; a < members.size(); ++a) {
        auto& member = members[a];
        std::sort(member.begin(), member.end());
        member.erase(std::unique(member.begin(), member.end()), member.end());
        if (member.empty() && !allow_empty) {
            Error::raise(ErrorKind::EmptyMember, "cover member '" + names[a] + "' is empty");
        }
        for (int p : member) {
            if (p < 0 || p >= point_count) {
                Error::raise(ErrorKind::IndexMismatch,
                             "cover member '" + names[a] + "' references unknown point " +
                                 std::to_string(p));
            }
            covered[static_cast<std::size_t>(p)] = 1;
        }
    }
    for (int p = 0; p < point_count; ++p) {
        if (!covered[static_cast<std::size_t>(p)]) {
            Error::raise(ErrorKind::NotACover,
                         "point " + std::to_string(p) + " is not covered");
        }
    }
    return Cover(std::move(names), std::move(members), point_count);
}

Cover Cover::create(std::vector<std::string> names, std::vector<std::vector<int>> members,
                    int point_count) {
    return build(std::move(names), std::move(members), point_count, false);
}

Cover Cover::refinement_family(std::vector<std::string> names,
                               std::vector<std::vector<int>> members, int point_count) {
    return build(std::move(names), std::move(members), point_count, true);
}

int Cover::multiplicity_at(int point) const {
    int count = 0;
    for (std::size_t a = 0; a < members_.size(); ++a) {
        if (contains(a, point)) ++count;
    }
    return count;
}

int Cover::multiplicity() const {
    int best = 0;
    for (int p = 0; p < point_count_; ++p) {
        best = std::max(best, multiplicity_at(p));
    }
    return best;
}

}  // namespace pou

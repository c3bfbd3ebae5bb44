#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pou {

/// An indexed family of point subsets covering a finite space. Members are
/// stored as sorted unique point indices with an O(1) membership table.
///
/// The strict factory rejects empty members, as user-supplied covers must
/// have them nonempty. Refinement constructions may legitimately produce
/// empty members (index-preserving shrinking, recoloring); those go through
/// the family factory, which keeps the empty entries.
class Cover {
  public:
    static Cover create(std::vector<std::string> names,
                        std::vector<std::vector<int>> members, int point_count);

    /// Like create() but tolerates empty members. The union must still be
    /// the whole space.
    static Cover refinement_family(std::vector<std::string> names,
                                   std::vector<std::vector<int>> members, int point_count);

    std::size_t set_count() const { return members_.size(); }
    int point_count() const { return point_count_; }

    const std::string& name(std::size_t a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& member(std::size_t a) const { return members_[a]; }

    bool contains(std::size_t a, int point) const {
        return membership_[a * static_cast<std::size_t>(point_count_) +
                            static_cast<std::size_t>(point)] != 0;
    }

    bool is_whole_space(std::size_t a) const {
        return members_[a].size() == static_cast<std::size_t>(point_count_);
    }

    int multiplicity_at(int point) const;
    /// max over points of the number of members containing the point.
    int multiplicity() const;

  private:
    Cover(std::vector<std::string> names, std::vector<std::vector<int>> members,
          int point_count);

    static Cover build(std::vector<std::string> names,
                       std::vector<std::vector<int>> members, int point_count,
                       bool allow_empty);

    std::vector<std::string> names_;
    std::vector<std::vector<int>> members_;
    std::vector<char> membership_;  // set_count x point_count
    int point_count_;
};

}  // namespace pou

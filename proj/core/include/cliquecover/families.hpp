#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "cliquecover/index_set.hpp"

namespace cliquecover {

// Enumerating maximal intersecting families touches one of each pair of
// complementary subsets of [m]; past this cap the search space is
// prohibitive (the family count lambda(m) itself explodes past m = 7).
inline constexpr int kDefaultMaxFamilyUniverse = 7;

// A set of non-empty index sets, kept deduplicated in canonical order.
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<IndexSet> members);
  Family(std::initializer_list<IndexSet> members);

  const std::vector<IndexSet>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(IndexSet J) const;

  friend bool operator==(const Family&, const Family&) = default;
  friend bool operator<(const Family& a, const Family& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<IndexSet> members_;
};

// Every pair of members intersects; vacuously true when |f| <= 1.
bool is_intersecting(const Family& f);

// The member-intersection graph is connected; true when |f| <= 1.
bool is_path_intersecting(const Family& f);

// An intersecting family over the non-empty subsets of [m] is maximal
// exactly when it has 2^{m-1} members. Throws when f is not intersecting
// or a member falls outside [m].
bool is_maximal_intersecting(const Family& f, int m);

// All maximal intersecting families over the non-empty subsets of [m],
// in a fixed depth-first order. The search walks the 2^{m-1}-1 pairs of
// complementary sets (a maximal family holds exactly one of each, plus
// [m] itself), pruning any branch that breaks pairwise intersection.
void for_each_maximal_intersecting(int m,
                                   const std::function<void(const Family&)>& yield,
                                   int max_universe = kDefaultMaxFamilyUniverse);
std::vector<Family> enumerate_maximal_intersecting(
    int m, int max_universe = kDefaultMaxFamilyUniverse);

// Number of maximal intersecting families on [m] (lambda), by streaming the
// enumeration without materializing families.
long long count_maximal_intersecting(int m,
                                     int max_universe = kDefaultMaxFamilyUniverse);

// Incremental events from a family enumeration. push/pop maintain the
// current family as a stack; emit fires once per enumerated family, with
// the stack holding its members. Lets consumers fold products over a
// stream of families without materializing them.
struct FamilyEnumerationHooks {
  std::function<void(IndexSet)> push;
  std::function<void()> pop;
  std::function<void()> emit;
};

// Depth-first walk of every non-empty intersecting subset of `cells`,
// each exactly once. Cells must be distinct and non-empty; candidates are
// taken in the given order and a branch is cut on the first
// non-intersecting pair.
void visit_intersecting_over(const std::vector<IndexSet>& cells,
                             const FamilyEnumerationHooks& hooks);

// Depth-first walk of every non-empty path-intersecting subset of `cells`
// (connected subsets of the cell-intersection graph), each exactly once.
void visit_path_intersecting_over(const std::vector<IndexSet>& cells,
                                  const FamilyEnumerationHooks& hooks);

// Materializing wrappers over the visitors: one callback per family.
void enumerate_intersecting_over(const std::vector<IndexSet>& cells,
                                 const std::function<void(const Family&)>& yield);
void enumerate_path_intersecting_over(const std::vector<IndexSet>& cells,
                                      const std::function<void(const Family&)>& yield);

}  // namespace cliquecover

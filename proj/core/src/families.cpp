#include "cliquecover/families.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace cliquecover {

Family::Family(std::vector<IndexSet> members) : members_(std::move(members)) {
  for (IndexSet J : members_) {
    if (J.empty()) {
      throw std::invalid_argument("family members must be non-empty index sets");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Family::Family(std::initializer_list<IndexSet> members)
    : Family(std::vector<IndexSet>(members)) {}

bool Family::contains(IndexSet J) const {
  return std::binary_search(members_.begin(), members_.end(), J);
}

bool is_intersecting(const Family& f) {
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (!ms[i].intersects(ms[j])) return false;
    }
  }
  return true;
}

bool is_path_intersecting(const Family& f) {
  const auto& ms = f.members();
  if (ms.size() <= 1) return true;
  std::vector<bool> seen(ms.size(), false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (!seen[j] && ms[i].intersects(ms[j])) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == ms.size();
}

bool is_maximal_intersecting(const Family& f, int m) {
  if (m < 1 || m > IndexSet::kMaxWidth) {
    throw std::invalid_argument("universe size out of range");
  }
  const IndexSet full = IndexSet::full(m);
  for (IndexSet J : f.members()) {
    if (!J.subset_of(full)) {
      throw std::invalid_argument("family member outside the universe");
    }
  }
  if (!is_intersecting(f)) {
    throw std::invalid_argument("family is not intersecting");
  }
  return static_cast<std::uint64_t>(f.size()) == std::uint64_t{1} << (m - 1);
}

namespace {

// Shared search for maximal intersecting families on [m]. Walks the pairs
// (J, complement of J) in canonical order of the representative, keeping a
// bitmask over all subsets of the sets still compatible with every choice
// made so far. [m] itself intersects everything and is always in.
template <typename Emit>
void maximal_family_search(int m, int max_universe, Emit&& emit) {
  if (m < 1) throw std::invalid_argument("universe size must be at least 1");
  if (m > max_universe) {
    throw std::invalid_argument(
        "maximal-family enumeration over [" + std::to_string(m) +
        "] walks 2^(m-1) complement pairs and the output count grows hyper-exponentially; capped at m = " +
        std::to_string(max_universe) + " (raise the cap explicitly to proceed)");
  }
  if (m > 12) {
    throw std::invalid_argument(
        "maximal-family enumeration is not supported beyond m = 12");
  }

  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  const std::size_t universe = std::uint64_t{1} << m;
  const std::size_t words = (universe + 63) / 64;

  // compat[s] = bitmask over all subsets t with s & t != 0
  std::vector<std::vector<std::uint64_t>> compat(
      universe, std::vector<std::uint64_t>(words, 0));
  for (std::uint64_t s = 1; s < universe; ++s) {
    for (std::uint64_t t = 1; t < universe; ++t) {
      if (s & t) compat[s][t / 64] |= std::uint64_t{1} << (t % 64);
    }
  }

  std::vector<std::uint64_t> reps;
  for (std::uint64_t s = 1; s < full; ++s) {
    const std::uint64_t c = full ^ s;
    const int ps = std::popcount(s);
    const int pc = std::popcount(c);
    if (ps < pc || (ps == pc && s < c)) reps.push_back(s);
  }
  std::sort(reps.begin(), reps.end(), [](std::uint64_t a, std::uint64_t b) {
    return IndexSet::from_bits(a) < IndexSet::from_bits(b);
  });

  std::vector<std::uint64_t> chosen = {full};
  // allowed[level] = compatibility mask after the first `level` choices
  std::vector<std::vector<std::uint64_t>> allowed(reps.size() + 1,
                                                  std::vector<std::uint64_t>(words));
  allowed[0] = compat[full];

  auto permitted = [&](std::size_t level, std::uint64_t s) {
    return (allowed[level][s / 64] >> (s % 64)) & 1;
  };

  auto descend = [&](std::size_t level, std::uint64_t s, auto&& self) -> void {
    chosen.push_back(s);
    for (std::size_t w = 0; w < words; ++w) {
      allowed[level + 1][w] = allowed[level][w] & compat[s][w];
    }
    if (level + 1 == reps.size()) {
      emit(chosen);
    } else {
      const std::uint64_t rep = reps[level + 1];
      const std::uint64_t comp = full ^ rep;
      if (permitted(level + 1, rep)) self(level + 1, rep, self);
      if (permitted(level + 1, comp)) self(level + 1, comp, self);
    }
    chosen.pop_back();
  };

  if (reps.empty()) {
    emit(chosen);  // m == 1: the single family {[1]}
    return;
  }
  const std::uint64_t rep0 = reps[0];
  const std::uint64_t comp0 = full ^ rep0;
  if (permitted(0, rep0)) descend(0, rep0, descend);
  if (permitted(0, comp0)) descend(0, comp0, descend);
}

}  // namespace

void for_each_maximal_intersecting(int m,
                                   const std::function<void(const Family&)>& yield,
                                   int max_universe) {
  maximal_family_search(m, max_universe, [&](const std::vector<std::uint64_t>& chosen) {
    std::vector<IndexSet> members;
    members.reserve(chosen.size());
    for (std::uint64_t bits : chosen) members.push_back(IndexSet::from_bits(bits));
    yield(Family(std::move(members)));
  });
}

std::vector<Family> enumerate_maximal_intersecting(int m, int max_universe) {
  std::vector<Family> out;
  for_each_maximal_intersecting(
      m, [&](const Family& f) { out.push_back(f); }, max_universe);
  return out;
}

long long count_maximal_intersecting(int m, int max_universe) {
  long long count = 0;
  maximal_family_search(m, max_universe,
                        [&](const std::vector<std::uint64_t>&) { ++count; });
  return count;
}

namespace {

void check_cells(const std::vector<IndexSet>& cells) {
  std::set<IndexSet> distinct;
  for (IndexSet J : cells) {
    if (J.empty()) throw std::invalid_argument("cells must be non-empty index sets");
    if (!distinct.insert(J).second) {
      throw std::invalid_argument("cells must be distinct");
    }
  }
}

}  // namespace

void visit_intersecting_over(const std::vector<IndexSet>& cells,
                             const FamilyEnumerationHooks& hooks) {
  check_cells(cells);
  const int k = static_cast<int>(cells.size());
  std::vector<int> stack;

  auto extend = [&](int start, auto&& self) -> void {
    for (int i = start; i < k; ++i) {
      bool compatible = true;
      for (int j : stack) {
        if (!cells[static_cast<std::size_t>(i)].intersects(cells[static_cast<std::size_t>(j)])) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      stack.push_back(i);
      hooks.push(cells[static_cast<std::size_t>(i)]);
      hooks.emit();
      self(i + 1, self);
      hooks.pop();
      stack.pop_back();
    }
  };
  extend(0, extend);
}

void visit_path_intersecting_over(const std::vector<IndexSet>& cells,
                                  const FamilyEnumerationHooks& hooks) {
  check_cells(cells);
  const int k = static_cast<int>(cells.size());
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && cells[static_cast<std::size_t>(i)].intersects(cells[static_cast<std::size_t>(j)])) {
        nbr[static_cast<std::size_t>(i)].push_back(j);
      }
    }
  }

  // Connected-subset enumeration: grow from each root over candidates with
  // larger indices, extending the frontier by exclusive neighbours only, so
  // every connected subset of the intersection graph appears exactly once.
  std::vector<bool> in_set(static_cast<std::size_t>(k), false);
  std::vector<int> nbr_count(static_cast<std::size_t>(k), 0);

  auto extend = [&](std::vector<int> ext, int root, auto&& self) -> void {
    while (!ext.empty()) {
      const int w = ext.front();
      ext.erase(ext.begin());
      std::vector<int> next = ext;
      for (int u : nbr[static_cast<std::size_t>(w)]) {
        if (u > root && !in_set[static_cast<std::size_t>(u)] &&
            nbr_count[static_cast<std::size_t>(u)] == 0) {
          next.push_back(u);
        }
      }
      in_set[static_cast<std::size_t>(w)] = true;
      for (int u : nbr[static_cast<std::size_t>(w)]) ++nbr_count[static_cast<std::size_t>(u)];
      hooks.push(cells[static_cast<std::size_t>(w)]);
      hooks.emit();
      self(std::move(next), root, self);
      hooks.pop();
      for (int u : nbr[static_cast<std::size_t>(w)]) --nbr_count[static_cast<std::size_t>(u)];
      in_set[static_cast<std::size_t>(w)] = false;
    }
  };

  for (int v = 0; v < k; ++v) {
    std::vector<int> ext;
    for (int u : nbr[static_cast<std::size_t>(v)]) {
      if (u > v) ext.push_back(u);
    }
    in_set[static_cast<std::size_t>(v)] = true;
    for (int u : nbr[static_cast<std::size_t>(v)]) ++nbr_count[static_cast<std::size_t>(u)];
    hooks.push(cells[static_cast<std::size_t>(v)]);
    hooks.emit();
    extend(std::move(ext), v, extend);
    hooks.pop();
    for (int u : nbr[static_cast<std::size_t>(v)]) --nbr_count[static_cast<std::size_t>(u)];
    in_set[static_cast<std::size_t>(v)] = false;
  }
}

namespace {

void enumerate_with(const std::vector<IndexSet>& cells,
                    const std::function<void(const Family&)>& yield,
                    void (*visit)(const std::vector<IndexSet>&,
                                  const FamilyEnumerationHooks&)) {
  std::vector<IndexSet> current;
  FamilyEnumerationHooks hooks;
  hooks.push = [&](IndexSet J) { current.push_back(J); };
  hooks.pop = [&] { current.pop_back(); };
  hooks.emit = [&] { yield(Family(current)); };
  visit(cells, hooks);
}

}  // namespace

void enumerate_intersecting_over(const std::vector<IndexSet>& cells,
                                 const std::function<void(const Family&)>& yield) {
  enumerate_with(cells, yield, &visit_intersecting_over);
}

void enumerate_path_intersecting_over(const std::vector<IndexSet>& cells,
                                      const std::function<void(const Family&)>& yield) {
  enumerate_with(cells, yield, &visit_path_intersecting_over);
}

}  // namespace cliquecover

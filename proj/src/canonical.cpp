#include "tourney/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "tourney/errors.hpp"
#include "tourney/parallel.hpp"

namespace tourney {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Splits cells by out-neighbour counts into every cell until the partition
// is equitable. Subcells are ordered by signature, so the result depends only
// on the tournament and the incoming cell order.
void refine(const Tournament& t, Partition& cells) {
  const int n = t.order();
  std::vector<VertexSet> masks;
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
  while (true) {
    masks.assign(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) masks[c] |= VertexSet{1} << v;
    }
    Partition next;
    next.reserve(cells.size());
    for (const Cell& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      for (int v : cell) {
        auto& sig = signature[v];
        sig.resize(masks.size());
        for (std::size_t c = 0; c < masks.size(); ++c) {
          sig[c] = std::popcount(t.out_set(v) & masks[c]);
        }
      }
      Cell sorted = cell;
      std::stable_sort(sorted.begin(), sorted.end(),
                       [&](int a, int b) { return signature[a] < signature[b]; });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i == sorted.size() || signature[sorted[i]] != signature[sorted[start]]) {
          next.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(start),
                            sorted.begin() + static_cast<std::ptrdiff_t>(i));
          start = i;
        }
      }
    }
    if (next.size() == cells.size()) return;
    cells = std::move(next);
  }
}

CanonicalForm pack(const Tournament& t, std::span<const int> order) {
  const int n = t.order();
  CanonicalForm key;
  key.n = n;
  key.words.assign(static_cast<std::size_t>((pair_count(n) + 63) / 64), 0);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (t.arc(order[i], order[j])) {
        key.words[static_cast<std::size_t>(k / 64)] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
  }
  return key;
}

struct Search {
  const Tournament& t;
  bool have_best = false;
  CanonicalForm best;
  std::vector<int> best_order;

  void run(Partition cells) {
    refine(t, cells);
    const auto branch = std::find_if(cells.begin(), cells.end(),
                                     [](const Cell& c) { return c.size() > 1; });
    if (branch == cells.end()) {
      std::vector<int> order;
      order.reserve(cells.size());
      for (const Cell& c : cells) order.push_back(c.front());
      CanonicalForm key = pack(t, order);
      if (!have_best || key < best) {
        best = std::move(key);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }
    const auto at = static_cast<std::size_t>(branch - cells.begin());
    const Cell cell = *branch;
    for (int v : cell) {
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
      child.push_back({v});
      Cell rest;
      for (int u : cell) {
        if (u != v) rest.push_back(u);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
      run(std::move(child));
    }
  }
};

Search canonical_search(const Tournament& t) {
  Search s{t, false, {}, {}};
  Cell all(static_cast<std::size_t>(t.order()));
  for (int v = 0; v < t.order(); ++v) all[v] = v;
  s.run(Partition{all});
  return s;
}

}  // namespace

Tournament CanonicalForm::representative() const {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(pair_count(n)));
  for (std::size_t k = 0; k < bits.size(); ++k) {
    bits[k] = static_cast<std::uint8_t>((words[k / 64] >> (63 - k % 64)) & 1U);
  }
  return Tournament::from_bits(n, bits);
}

CanonicalForm canonical_form(const Tournament& t) { return canonical_search(t).best; }

std::vector<int> canonical_labeling(const Tournament& t) {
  const Search s = canonical_search(t);
  std::vector<int> perm(static_cast<std::size_t>(t.order()));
  for (int pos = 0; pos < t.order(); ++pos) perm[s.best_order[pos]] = pos;
  return perm;
}

std::vector<Tournament> enumerate_tournaments(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw InputError("exhaustive enumeration supports 1 <= n <= " +
                     std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
  // Every (k+1)-tournament is a one-vertex extension of its subtournament on
  // the first k vertices, so extending one representative per k-class in all
  // 2^k ways reaches every (k+1)-class.
  std::vector<Tournament> level{Tournament(1)};
  for (int k = 1; k < n; ++k) {
    std::map<CanonicalForm, bool> seen;
    for (const Tournament& base : level) {
      for (VertexSet beats_new = 0; beats_new < (VertexSet{1} << k); ++beats_new) {
        Tournament ext(k + 1);
        for (int u = 0; u < k; ++u) {
          for (int v = u + 1; v < k; ++v) {
            if (base.arc(u, v)) {
              ext.orient(u, v);
            } else {
              ext.orient(v, u);
            }
          }
          if ((beats_new >> u) & 1U) {
            ext.orient(u, k);
          } else {
            ext.orient(k, u);
          }
        }
        seen.emplace(canonical_form(ext), true);
      }
    }
    level.clear();
    for (const auto& [key, unused] : seen) level.push_back(key.representative());
  }
  return level;
}

std::set<CanonicalForm> switching_class(const Tournament& t) {
  const int n = t.order();
  if (n > 24) throw InputError("switching_class is limited to n <= 24");
  const std::size_t subsets = std::size_t{1} << (n - 1);
  std::vector<std::set<CanonicalForm>> partial(worker_count());
  parallel_chunks(subsets, [&](std::size_t worker, std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      // subset = {0} plus the vertices 1..n-1 encoded by s
      const VertexSet subset = 1U | (static_cast<VertexSet>(s) << 1);
      partial[worker].insert(canonical_form(switched(t, subset)));
    }
  });
  std::set<CanonicalForm> merged;
  for (auto& p : partial) merged.merge(p);
  return merged;
}

}  // namespace tourney

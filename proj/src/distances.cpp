#include "wbnsl/distances.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace wbnsl {

namespace {

void require_same_variables(const Ordering& a, const Ordering& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("orderings are over different variable sets");
}

// b-positions of a's sequence; the identity iff a == b.
std::vector<int> position_map(const Ordering& a, const Ordering& b) {
  std::vector<int> m(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i)
    m[static_cast<std::size_t>(i)] = b.position_of(a.at(i));
  return m;
}

long long count_inversions(std::vector<int>& v) {
  // merge sort with a shared buffer
  std::vector<int> buf(v.size());
  long long inversions = 0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo + width < v.size(); lo += 2 * width) {
      std::size_t mid = lo + width;
      std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t i = lo, j = mid, out = lo;
      while (i < mid && j < hi) {
        if (v[i] <= v[j]) {
          buf[out++] = v[i++];
        } else {
          inversions += static_cast<long long>(mid - i);
          buf[out++] = v[j++];
        }
      }
      while (i < mid) buf[out++] = v[i++];
      while (j < hi) buf[out++] = v[j++];
      std::copy(buf.begin() + static_cast<long>(lo), buf.begin() + static_cast<long>(hi),
                v.begin() + static_cast<long>(lo));
    }
  }
  return inversions;
}

}  // namespace

long long kendall_tau(const Ordering& a, const Ordering& b) {
  require_same_variables(a, b);
  std::vector<int> m = position_map(a, b);
  return count_inversions(m);
}

int insert_distance(const Ordering& a, const Ordering& b) {
  require_same_variables(a, b);
  std::vector<int> m = position_map(a, b);
  // LCS of two permutations = longest increasing subsequence of the map.
  std::vector<int> tails;
  for (int x : m) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return a.size() - static_cast<int>(tails.size());
}

int swap_distance(const Ordering& a, const Ordering& b) {
  require_same_variables(a, b);
  std::vector<int> m = position_map(a, b);
  std::vector<bool> seen(m.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(m[j])) seen[j] = true;
  }
  return a.size() - cycles;
}

int win_distance(const Ordering& a, const Ordering& b) {
  require_same_variables(a, b);
  int first = -1, last = -1;
  for (int i = 0; i < a.size(); ++i) {
    if (a.at(i) != b.at(i)) {
      if (first < 0) first = i;
      last = i;
    }
  }
  return first < 0 ? 0 : last - first;
}

long long invwin_distance(const Ordering& a, const Ordering& b) {
  require_same_variables(a, b);
  const int n = a.size();
  // Finest partition into intervals holding the same variables in both
  // orderings: cut whenever the prefix contents agree.
  std::vector<int> balance(static_cast<std::size_t>(n), 0);
  long long widest = 0;
  int open = 0;
  int block_start = 0;
  for (int i = 0; i < n; ++i) {
    if (++balance[static_cast<std::size_t>(a.at(i))] == 0) --open;
    if (balance[static_cast<std::size_t>(a.at(i))] == 1) ++open;
    if (--balance[static_cast<std::size_t>(b.at(i))] == 0) --open;
    if (balance[static_cast<std::size_t>(b.at(i))] == -1) ++open;
    if (open == 0) {
      // inversions of b's block relative to a's block
      std::vector<int> rank(static_cast<std::size_t>(n), 0);
      for (int j = block_start; j <= i; ++j)
        rank[static_cast<std::size_t>(a.at(j))] = j;
      std::vector<int> spans;
      spans.reserve(static_cast<std::size_t>(i - block_start + 1));
      for (int j = block_start; j <= i; ++j)
        spans.push_back(rank[static_cast<std::size_t>(b.at(j))]);
      widest = std::max(widest, count_inversions(spans));
      block_start = i + 1;
    }
  }
  return widest;
}

long long ordering_distance(DistanceKind kind, const Ordering& a, const Ordering& b) {
  switch (kind) {
    case DistanceKind::insert:
      return insert_distance(a, b);
    case DistanceKind::swap:
      return swap_distance(a, b);
    case DistanceKind::inversions:
      return kendall_tau(a, b);
    case DistanceKind::inversion_window:
      return invwin_distance(a, b);
  }
  throw std::logic_error("unknown distance kind");
}

std::string distance_kind_name(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::insert:
      return "insert";
    case DistanceKind::swap:
      return "swap";
    case DistanceKind::inversions:
      return "inv";
    case DistanceKind::inversion_window:
      return "invwin";
  }
  throw std::logic_error("unknown distance kind");
}

}  // namespace wbnsl

#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wbnsl {

using VarId = int;

// Set of variable ids; dense ids make subset tests and unions cheap.
using VarSet = boost::dynamic_bitset<>;

inline VarSet make_varset(int n, std::initializer_list<VarId> ids = {}) {
  VarSet s(static_cast<std::size_t>(n));
  for (VarId v : ids) s.set(static_cast<std::size_t>(v));
  return s;
}

// One candidate parent set of a variable, with its local score and
// structural weight. A variable may carry several triples for the same
// parent set with different (score, weight) combinations.
struct ScoreTriple {
  VarSet parents;
  double score = 0.0;
  long long weight = 0;
};

// Local multiscores: per variable the list of candidate triples. Every
// variable must keep at least one (empty parents, weight 0) triple so the
// arcless network is always realizable within any budget.
class MultiScores {
 public:
  MultiScores() = default;
  explicit MultiScores(int n);
  explicit MultiScores(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(VarId v) const { return names_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& names() const { return names_; }

  const std::vector<ScoreTriple>& triples(VarId v) const {
    return triples_[static_cast<std::size_t>(v)];
  }
  const ScoreTriple& triple(VarId v, int idx) const {
    return triples_[static_cast<std::size_t>(v)][static_cast<std::size_t>(idx)];
  }

  // Validates owner not in parents, finite score, nonnegative weight.
  void add(VarId v, const VarSet& parents, double score, long long weight);
  void add(VarId v, std::initializer_list<VarId> parents, double score, long long weight);

  // Throws if some variable lacks an empty-parent-set triple of weight zero.
  void check_complete() const;

  long long total_triples() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<ScoreTriple>> triples_;
};

// Permutation of the variable ids with O(1) position lookup.
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(std::vector<VarId> seq);
  static Ordering identity(int n);

  int size() const { return static_cast<int>(seq_.size()); }
  VarId at(int pos) const { return seq_[static_cast<std::size_t>(pos)]; }
  int position_of(VarId v) const { return pos_[static_cast<std::size_t>(v)]; }
  const std::vector<VarId>& sequence() const { return seq_; }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq_ == b.seq_; }

 private:
  std::vector<VarId> seq_;
  std::vector<int> pos_;
};

// A parent-set assignment: one chosen triple per variable, with the totals
// and a witness topological ordering of the induced arc set.
struct ScoredDag {
  std::vector<int> chosen;  // triple index per variable
  double score = 0.0;
  long long weight = 0;
  Ordering witness;
};

// Canonical totals: fixed summation order (ascending variable id) so equal
// assignments always report bit-identical scores.
ScoredDag make_scored_dag(const MultiScores& scores, std::vector<int> chosen, Ordering witness);

// Weight budget k and search radius r.
struct Budget {
  int k = 0;
  int r = 0;
};

// Outcome of a search: best feasible assignment plus run diagnostics.
struct SearchResult {
  ScoredDag dag;
  std::uint64_t seed = 0;
  long long repetitions = 0;
  long long evaluations = 0;
};

// True iff the induced digraph is acyclic, every chosen triple index exists
// in `scores`, and the total weight is at most k. A triple index out of
// range (or a chosen vector of the wrong length) is a structural defect and
// throws instead of returning false.
bool is_valid_scored_dag(const MultiScores& scores, const ScoredDag& dag, long long k);

// Per-variable union of all possible parent sets; arc (u,v) of the
// superstructure exists iff u is set in the v-th entry.
std::vector<VarSet> superstructure_parents(const MultiScores& scores);

// Rewrites every triple's weight to |parents|, so a weight budget bounds the
// total number of arcs.
MultiScores encode_bounded_arcs(const MultiScores& scores);

// Rewrites every triple's weight to 1 if |parents| > c else 0, so a weight
// budget bounds the number of variables with more than c parents.
MultiScores encode_bounded_indegree(const MultiScores& scores, int c);

}  // namespace wbnsl

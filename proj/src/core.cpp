#include "wbnsl/core.hpp"

#include <algorithm>
#include <cmath>

namespace wbnsl {

MultiScores::MultiScores(int n) : triples_(static_cast<std::size_t>(n)) {
  names_.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) names_.push_back("v" + std::to_string(v));
}

MultiScores::MultiScores(std::vector<std::string> names)
    : names_(std::move(names)), triples_(names_.size()) {}

void MultiScores::add(VarId v, const VarSet& parents, double score, long long weight) {
  if (v < 0 || v >= size()) throw std::invalid_argument("variable id out of range");
  if (parents.size() != static_cast<std::size_t>(size()))
    throw std::invalid_argument("parent set sized for a different variable count");
  if (parents.test(static_cast<std::size_t>(v)))
    throw std::invalid_argument("variable " + name(v) + " listed as its own parent");
  if (!std::isfinite(score)) throw std::invalid_argument("score must be finite");
  if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
  triples_[static_cast<std::size_t>(v)].push_back(ScoreTriple{parents, score, weight});
}

void MultiScores::add(VarId v, std::initializer_list<VarId> parents, double score,
                      long long weight) {
  add(v, make_varset(size(), parents), score, weight);
}

void MultiScores::check_complete() const {
  for (int v = 0; v < size(); ++v) {
    bool found = false;
    for (const auto& t : triples(v)) {
      if (t.parents.none() && t.weight == 0) {
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("variable " + name(v) +
                                  " has no empty parent set with weight zero");
  }
}

long long MultiScores::total_triples() const {
  long long total = 0;
  for (const auto& ts : triples_) total += static_cast<long long>(ts.size());
  return total;
}

Ordering::Ordering(std::vector<VarId> seq) : seq_(std::move(seq)) {
  const int n = static_cast<int>(seq_.size());
  pos_.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    VarId v = seq_[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos_[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("ordering is not a permutation of 0..n-1");
    pos_[static_cast<std::size_t>(v)] = i;
  }
}

Ordering Ordering::identity(int n) {
  std::vector<VarId> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
  return Ordering(std::move(seq));
}

ScoredDag make_scored_dag(const MultiScores& scores, std::vector<int> chosen, Ordering witness) {
  ScoredDag dag;
  dag.chosen = std::move(chosen);
  dag.witness = std::move(witness);
  dag.score = 0.0;
  dag.weight = 0;
  for (int v = 0; v < scores.size(); ++v) {
    const auto& t = scores.triple(v, dag.chosen[static_cast<std::size_t>(v)]);
    dag.score += t.score;
    dag.weight += t.weight;
  }
  return dag;
}

bool is_valid_scored_dag(const MultiScores& scores, const ScoredDag& dag, long long k) {
  const int n = scores.size();
  if (static_cast<int>(dag.chosen.size()) != n)
    throw std::invalid_argument("chosen-triple vector has wrong length");
  long long weight = 0;
  for (int v = 0; v < n; ++v) {
    int idx = dag.chosen[static_cast<std::size_t>(v)];
    if (idx < 0 || idx >= static_cast<int>(scores.triples(v).size()))
      throw std::out_of_range("triple index out of range for variable " + scores.name(v));
    weight += scores.triple(v, idx).weight;
  }
  if (weight > k) return false;

  // Kahn's algorithm on the induced arc set.
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<VarId>> children(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const VarSet& parents = scores.triple(v, dag.chosen[static_cast<std::size_t>(v)]).parents;
    indegree[static_cast<std::size_t>(v)] = static_cast<int>(parents.count());
    for (std::size_t u = parents.find_first(); u != VarSet::npos; u = parents.find_next(u))
      children[u].push_back(v);
  }
  std::vector<VarId> queue;
  for (int v = 0; v < n; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  int emitted = 0;
  while (!queue.empty()) {
    VarId u = queue.back();
    queue.pop_back();
    ++emitted;
    for (VarId c : children[static_cast<std::size_t>(u)])
      if (--indegree[static_cast<std::size_t>(c)] == 0) queue.push_back(c);
  }
  return emitted == n;
}

std::vector<VarSet> superstructure_parents(const MultiScores& scores) {
  std::vector<VarSet> result;
  result.reserve(static_cast<std::size_t>(scores.size()));
  for (int v = 0; v < scores.size(); ++v) {
    VarSet acc(static_cast<std::size_t>(scores.size()));
    for (const auto& t : scores.triples(v)) acc |= t.parents;
    result.push_back(std::move(acc));
  }
  return result;
}

MultiScores encode_bounded_arcs(const MultiScores& scores) {
  MultiScores out(scores.names());
  for (int v = 0; v < scores.size(); ++v)
    for (const auto& t : scores.triples(v))
      out.add(v, t.parents, t.score, static_cast<long long>(t.parents.count()));
  return out;
}

MultiScores encode_bounded_indegree(const MultiScores& scores, int c) {
  if (c < 0) throw std::invalid_argument("indegree bound must be nonnegative");
  MultiScores out(scores.names());
  for (int v = 0; v < scores.size(); ++v)
    for (const auto& t : scores.triples(v))
      out.add(v, t.parents, t.score,
              static_cast<long long>(t.parents.count()) > c ? 1 : 0);
  return out;
}

}  // namespace wbnsl

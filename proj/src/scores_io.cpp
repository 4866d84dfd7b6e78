#include "wbnsl/scores_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unordered_map>

#include "wbnsl/util.hpp"

namespace wbnsl {

namespace {

struct Token {
  std::string text;
  int line;
};

// Lines split into whitespace-separated tokens; '#' lines and blank lines
// are skipped, trailing '\r' stripped.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  // Next record as a token list, or false at end of input.
  bool next_record(std::vector<Token>& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t i = 0;
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size() || line[i] == '#') continue;
      out.clear();
      while (i < line.size()) {
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        out.push_back(Token{line.substr(i, j - i), line_no_});
        i = j;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      }
      return true;
    }
    return false;
  }

  int line() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

double parse_score_token(const Token& tok) {
  const std::string& s = tok.text;
  std::size_t start = (!s.empty() && s[0] == '+') ? 1 : 0;
  double value = 0.0;
  auto res = std::from_chars(s.data() + start, s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(value))
    throw ParseError(tok.line, "invalid score '" + s + "'");
  return value;
}

long long parse_count_token(const Token& tok, const char* what) {
  const std::string& s = tok.text;
  long long value = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || value < 0)
    throw ParseError(tok.line, std::string("invalid ") + what + " '" + s + "'");
  return value;
}

struct RawTriple {
  double score;
  long long weight;
  std::vector<Token> parents;
};

bool dot_id_needs_quotes(const std::string& name) {
  if (name.empty()) return true;
  if (name[0] >= '0' && name[0] <= '9') return true;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_';
    if (!ok) return true;
  }
  return false;
}

std::string dot_id(const std::string& name) {
  if (!dot_id_needs_quotes(name)) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

MultiScores parse_scores(std::istream& in, const ParseOptions& options) {
  TokenReader reader(in);
  std::vector<Token> record;

  if (!reader.next_record(record)) throw ParseError(reader.line(), "empty input");
  if (record.size() != 1)
    throw ParseError(record[0].line, "expected a single variable count");
  long long declared = parse_count_token(record[0], "variable count");
  if (declared <= 0) throw ParseError(record[0].line, "variable count must be positive");
  const int n = static_cast<int>(declared);

  std::vector<std::string> names;
  std::unordered_map<std::string, VarId> id_of;
  std::vector<std::vector<RawTriple>> raw(static_cast<std::size_t>(n));

  for (int v = 0; v < n; ++v) {
    if (!reader.next_record(record))
      throw ParseError(reader.line(), "expected header for variable " + std::to_string(v + 1));
    if (record.size() != 2)
      throw ParseError(record[0].line, "expected variable header 'name count'");
    const std::string& name = record[0].text;
    if (id_of.count(name))
      throw ParseError(record[0].line, "duplicate variable block '" + name + "'");
    id_of.emplace(name, v);
    names.push_back(name);
    long long entries = parse_count_token(record[1], "parent-set count");

    for (long long e = 0; e < entries; ++e) {
      if (!reader.next_record(record))
        throw ParseError(reader.line(), "expected " + std::to_string(entries) +
                                            " parent-set records for '" + name + "'");
      std::size_t at = 0;
      RawTriple triple;
      if (record.size() < (options.weighted ? 3u : 2u))
        throw ParseError(record[0].line, "truncated parent-set record");
      triple.score = parse_score_token(record[at++]);
      triple.weight = options.weighted ? parse_count_token(record[at++], "weight") : 0;
      long long parent_count = parse_count_token(record[at++], "parent count");
      if (static_cast<long long>(record.size() - at) != parent_count)
        throw ParseError(record[0].line,
                         "parent count " + std::to_string(parent_count) + " but " +
                             std::to_string(record.size() - at) + " names given");
      for (; at < record.size(); ++at) triple.parents.push_back(record[at]);
      raw[static_cast<std::size_t>(v)].push_back(std::move(triple));
    }
  }
  if (reader.next_record(record))
    throw ParseError(record[0].line, "content after the last declared variable block");

  // Parent names may refer to later blocks, so resolve after reading all of
  // them.
  MultiScores scores(names);
  for (int v = 0; v < n; ++v) {
    for (const auto& triple : raw[static_cast<std::size_t>(v)]) {
      VarSet parents(static_cast<std::size_t>(n));
      for (const auto& tok : triple.parents) {
        auto it = id_of.find(tok.text);
        if (it == id_of.end())
          throw ParseError(tok.line, "unknown parent name '" + tok.text + "'");
        if (it->second == v)
          throw ParseError(tok.line, "variable '" + names[static_cast<std::size_t>(v)] +
                                         "' listed as its own parent");
        parents.set(static_cast<std::size_t>(it->second));
      }
      scores.add(v, parents, triple.score, triple.weight);
    }
  }

  for (int v = 0; v < n; ++v) {
    bool has_empty = false;
    for (const auto& t : scores.triples(v))
      if (t.parents.none() && t.weight == 0) has_empty = true;
    if (!has_empty) {
      if (options.assume_empty_score) {
        scores.add(v, VarSet(static_cast<std::size_t>(n)), *options.assume_empty_score, 0);
      } else {
        throw ParseError(reader.line(),
                         "variable '" + names[static_cast<std::size_t>(v)] +
                             "' has no empty parent set with weight zero "
                             "(use --assume-empty-score to inject one)");
      }
    }
  }
  return scores;
}

MultiScores parse_scores(const std::string& text, const ParseOptions& options) {
  std::istringstream in(text);
  return parse_scores(in, options);
}

MultiScores parse_scores_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_scores(in, options);
}

std::string write_scores(const MultiScores& scores, bool weighted) {
  std::string out = std::to_string(scores.size());
  out += '\n';
  for (int v = 0; v < scores.size(); ++v) {
    out += scores.name(v);
    out += ' ';
    out += std::to_string(scores.triples(v).size());
    out += '\n';
    for (const auto& t : scores.triples(v)) {
      if (!weighted && t.weight != 0)
        throw std::invalid_argument("instance has nonzero weights; write it weighted");
      out += format_double(t.score);
      if (weighted) {
        out += ' ';
        out += std::to_string(t.weight);
      }
      out += ' ';
      out += std::to_string(t.parents.count());
      for (std::size_t u = t.parents.find_first(); u != VarSet::npos;
           u = t.parents.find_next(u))
        out += ' ' + scores.name(static_cast<VarId>(u));
      out += '\n';
    }
  }
  return out;
}

std::string write_result_text(const MultiScores& scores, const ScoredDag& dag) {
  std::string out;
  for (int v = 0; v < scores.size(); ++v) {
    const VarSet& parents = scores.triple(v, dag.chosen[static_cast<std::size_t>(v)]).parents;
    out += scores.name(v);
    out += " <-";
    bool first = true;
    for (std::size_t u = parents.find_first(); u != VarSet::npos; u = parents.find_next(u)) {
      out += first ? " " : ",";
      out += scores.name(static_cast<VarId>(u));
      first = false;
    }
    out += '\n';
  }
  out += "score " + format_double(dag.score) + '\n';
  out += "weight " + std::to_string(dag.weight) + '\n';
  out += "ordering";
  for (VarId v : dag.witness.sequence()) out += ' ' + scores.name(v);
  out += '\n';
  return out;
}

std::string write_result_json(const MultiScores& scores, const ScoredDag& dag,
                              std::uint64_t seed, long long repetitions) {
  nlohmann::json j;
  j["variables"] = nlohmann::json::array();
  for (int v = 0; v < scores.size(); ++v) j["variables"].push_back(scores.name(v));
  j["arcs"] = nlohmann::json::array();
  for (int v = 0; v < scores.size(); ++v) {
    const VarSet& parents = scores.triple(v, dag.chosen[static_cast<std::size_t>(v)]).parents;
    for (std::size_t u = parents.find_first(); u != VarSet::npos; u = parents.find_next(u))
      j["arcs"].push_back({scores.name(static_cast<VarId>(u)), scores.name(v)});
  }
  j["score"] = dag.score;
  j["weight"] = dag.weight;
  j["ordering"] = nlohmann::json::array();
  for (VarId v : dag.witness.sequence()) j["ordering"].push_back(scores.name(v));
  j["seed"] = seed;
  j["repetitions"] = repetitions;
  return j.dump(2) + "\n";
}

std::string write_result_dot(const MultiScores& scores, const ScoredDag& dag) {
  std::string out = "digraph network {\n";
  for (int v = 0; v < scores.size(); ++v) out += "  " + dot_id(scores.name(v)) + ";\n";
  for (int v = 0; v < scores.size(); ++v) {
    const VarSet& parents = scores.triple(v, dag.chosen[static_cast<std::size_t>(v)]).parents;
    for (std::size_t u = parents.find_first(); u != VarSet::npos; u = parents.find_next(u))
      out += "  " + dot_id(scores.name(static_cast<VarId>(u))) + " -> " +
             dot_id(scores.name(v)) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace wbnsl

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "disrupt/adversary.hpp"
#include "disrupt/graph.hpp"

namespace disrupt {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// External string ids <-> dense indices, in order of first appearance.
class IdMap {
 public:
  Index intern(const std::string& name);
  std::optional<Index> find(const std::string& name) const;
  const std::string& name(Index id) const { return names_.at(id); }
  Index size() const { return names_.size(); }

  static IdMap identity(Index n);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> index_;
};

struct LoadedGraph {
  WeightedGraph graph;
  IdMap ids;
};

// One edge per line, `u v [w]`, whitespace separated, `#` starts a comment.
// A line holding a single id declares a node without edges. Unweighted
// files get w = 1.0; a weight column in an unweighted load is an error.
LoadedGraph parse_edgelist(std::istream& in, bool weighted,
                           const std::string& source = "<edgelist>");
LoadedGraph load_edgelist(const std::filesystem::path& path, bool weighted);

// `id value` per line; every id in `ids` exactly once, values in [0, 1].
OpinionVector parse_opinions(std::istream& in, const IdMap& ids,
                             const std::string& source = "<opinions>");
OpinionVector load_opinions(const std::filesystem::path& path, const IdMap& ids);

struct Dataset {
  std::string name;
  WeightedGraph graph;
  OpinionVector opinions;
  IdMap ids;
  Index isolated_removed = 0;
};

// Edge list plus opinions; with drop_isolated, zero-degree nodes are removed
// and the id map is rebuilt over the survivors.
Dataset load_dataset(const std::string& name,
                     const std::filesystem::path& edges,
                     const std::filesystem::path& opinions, bool weighted,
                     bool drop_isolated);

// Writers use 17 significant digits so that reads are lossless.
std::string format_double(double x);
double parse_double(const std::string& text);

void write_edgelist(std::ostream& out, const WeightedGraph& g);
void write_opinions(std::ostream& out, const OpinionVector& s);

struct SweepRow {
  std::string heuristic;
  std::string objective;
  double lambda = 0.0;
  Index k = 0;
  double value = 0.0;
  std::uint64_t seed = 0;
  std::string graph_id;

  bool operator==(const SweepRow&) const = default;
};

inline constexpr const char* kSweepHeader =
    "heuristic,objective,lambda,k,value,seed,graph_id";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in,
                                     const std::string& source = "<csv>");

// One JSON object per line.
void write_plan(std::ostream& out, const DisruptionPlan& plan);
std::vector<DisruptionPlan> read_plans(std::istream& in,
                                       const std::string& source = "<plans>");

}  // namespace disrupt

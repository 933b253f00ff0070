#include "disrupt/dataio.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace disrupt {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  const auto hash = line.find('#');
  std::istringstream in(hash == std::string::npos ? line : line.substr(0, hash));
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return in;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

Index IdMap::intern(const std::string& name) {
  auto [it, inserted] = index_.try_emplace(name, names_.size());
  if (inserted) names_.push_back(name);
  return it->second;
}

std::optional<Index> IdMap::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IdMap IdMap::identity(Index n) {
  IdMap ids;
  for (Index i = 0; i < n; ++i) ids.intern(std::to_string(i));
  return ids;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return x;
}

LoadedGraph parse_edgelist(std::istream& in, bool weighted,
                           const std::string& source) {
  LoadedGraph out;
  std::vector<Edge> edges;
  std::set<std::pair<Index, Index>> seen;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      out.ids.intern(tokens[0]);
      continue;
    }
    if (tokens.size() > 3) {
      throw ParseError(source, lineno, "expected 'u v [w]', got " +
                                           std::to_string(tokens.size()) + " fields");
    }
    if (tokens.size() == 3 && !weighted) {
      throw ParseError(source, lineno,
                       "weight column in an unweighted edge list");
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(source, lineno, "self-loop on '" + tokens[0] + "'");
    }
    double w = 1.0;
    if (tokens.size() == 3) {
      try {
        w = parse_double(tokens[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(source, lineno, e.what());
      }
      if (!(w > 0.0 && w <= 1.0)) {
        throw ParseError(source, lineno, "weight " + tokens[2] + " outside (0, 1]");
      }
    }
    const Index u = out.ids.intern(tokens[0]);
    const Index v = out.ids.intern(tokens[1]);
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw ParseError(source, lineno, "duplicate edge '" + tokens[0] + " " +
                                           tokens[1] + "'");
    }
    edges.push_back({u, v, w});
  }
  out.graph = WeightedGraph(out.ids.size(), edges);
  return out;
}

LoadedGraph load_edgelist(const std::filesystem::path& path, bool weighted) {
  auto in = open_input(path);
  return parse_edgelist(in, weighted, path.string());
}

OpinionVector parse_opinions(std::istream& in, const IdMap& ids,
                             const std::string& source) {
  OpinionVector s(static_cast<Eigen::Index>(ids.size()));
  std::vector<bool> covered(ids.size(), false);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError(source, lineno, "expected 'id value'");
    const auto id = ids.find(tokens[0]);
    if (!id) throw ParseError(source, lineno, "unknown node '" + tokens[0] + "'");
    if (covered[*id]) {
      throw ParseError(source, lineno, "duplicate opinion for '" + tokens[0] + "'");
    }
    double value = 0.0;
    try {
      value = parse_double(tokens[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    }
    if (!(value >= 0.0 && value <= 1.0)) {
      throw ParseError(source, lineno, "opinion " + tokens[1] + " outside [0, 1]");
    }
    covered[*id] = true;
    s[static_cast<Eigen::Index>(*id)] = value;
  }
  for (Index i = 0; i < ids.size(); ++i) {
    if (!covered[i]) {
      throw std::runtime_error(source + ": no opinion for node '" + ids.name(i) + "'");
    }
  }
  return s;
}

OpinionVector load_opinions(const std::filesystem::path& path, const IdMap& ids) {
  auto in = open_input(path);
  return parse_opinions(in, ids, path.string());
}

Dataset load_dataset(const std::string& name,
                     const std::filesystem::path& edges,
                     const std::filesystem::path& opinions, bool weighted,
                     bool drop_isolated) {
  Dataset out;
  out.name = name;
  LoadedGraph loaded = load_edgelist(edges, weighted);
  OpinionVector s = load_opinions(opinions, loaded.ids);
  if (!drop_isolated) {
    out.graph = std::move(loaded.graph);
    out.opinions = std::move(s);
    out.ids = std::move(loaded.ids);
    return out;
  }
  ReducedInstance reduced = remove_isolated(loaded.graph, s);
  out.isolated_removed = loaded.graph.num_nodes() - reduced.graph.num_nodes();
  out.graph = std::move(reduced.graph);
  out.opinions = std::move(reduced.opinions);
  for (Index old_id : reduced.kept) out.ids.intern(loaded.ids.name(old_id));
  return out;
}

void write_edgelist(std::ostream& out, const WeightedGraph& g) {
  out << "# nodes " << g.num_nodes() << " edges " << g.num_edges() << '\n';
  // Declaring every id up front keeps dense ids stable on reload.
  for (Index v = 0; v < g.num_nodes(); ++v) out << v << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
  }
}

void write_opinions(std::ostream& out, const OpinionVector& s) {
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    out << i << ' ' << format_double(s[i]) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.heuristic << ',' << r.objective << ',' << format_double(r.lambda)
        << ',' << r.k << ',' << format_double(r.value) << ',' << r.seed << ','
        << r.graph_id << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw ParseError(source, 1, std::string("expected header '") + kSweepHeader + "'");
  }
  std::vector<SweepRow> rows;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 7) {
      throw ParseError(source, lineno,
                       "expected 7 fields, got " + std::to_string(f.size()));
    }
    try {
      SweepRow r;
      r.heuristic = f[0];
      r.objective = f[1];
      r.lambda = parse_double(f[2]);
      r.k = static_cast<Index>(std::stoull(f[3]));
      r.value = parse_double(f[4]);
      r.seed = std::stoull(f[5]);
      r.graph_id = f[6];
      rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return rows;
}

void write_plan(std::ostream& out, const DisruptionPlan& plan) {
  nlohmann::json j;
  j["heuristic"] = plan.heuristic ? std::string(to_string(*plan.heuristic))
                                  : std::string("brute-force");
  j["objective"] = std::string(to_string(plan.objective.kind));
  j["lambda"] = plan.objective.lambda;
  j["scale"] = plan.objective.scale;
  j["budget"] = plan.budget;
  auto takeovers = nlohmann::json::array();
  for (const Takeover& t : plan.takeovers) takeovers.push_back({t.node, t.opinion});
  j["takeovers"] = std::move(takeovers);
  j["original"] = std::vector<double>(plan.original.begin(), plan.original.end());
  j["modified"] = std::vector<double>(plan.modified.begin(), plan.modified.end());
  j["trajectory"] = plan.trajectory;
  j["stopped_early"] = plan.stopped_early;
  out << j.dump() << '\n';
}

std::vector<DisruptionPlan> read_plans(std::istream& in, const std::string& source) {
  std::vector<DisruptionPlan> plans;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      DisruptionPlan plan;
      const auto heuristic = j.at("heuristic").get<std::string>();
      if (heuristic != "brute-force") plan.heuristic = parse_heuristic(heuristic);
      plan.objective.kind = parse_objective(j.at("objective").get<std::string>());
      plan.objective.lambda = j.at("lambda").get<double>();
      plan.objective.scale = j.at("scale").get<double>();
      plan.budget = j.at("budget").get<Index>();
      for (const auto& t : j.at("takeovers")) {
        plan.takeovers.push_back({t.at(0).get<Index>(), t.at(1).get<double>()});
      }
      const auto original = j.at("original").get<std::vector<double>>();
      const auto modified = j.at("modified").get<std::vector<double>>();
      plan.original = Eigen::Map<const Vector>(original.data(),
                                               static_cast<Eigen::Index>(original.size()));
      plan.modified = Eigen::Map<const Vector>(modified.data(),
                                               static_cast<Eigen::Index>(modified.size()));
      plan.trajectory = j.at("trajectory").get<std::vector<double>>();
      plan.stopped_early = j.at("stopped_early").get<bool>();
      plans.push_back(std::move(plan));
    } catch (const std::exception& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return plans;
}

}  // namespace disrupt

#include "tgb/tg_format.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace tgb {

TgInstance read_tg_instance(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<TemporalArc> arcs;
  std::optional<Time> declared_tau;
  std::optional<std::string> root_label;
  std::optional<std::int64_t> arc_budget;

  auto intern = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    const VertexId v = static_cast<VertexId>(labels.size());
    labels.push_back(name);
    index.emplace(name, v);
    return v;
  };

  std::string line;
  std::size_t line_no = 0;
  bool saw_arc = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first.front() == '#') continue;
    if (first == "tau") {
      if (saw_arc) throw TgParseError(line_no, "tau header after arc lines");
      if (declared_tau.has_value()) throw TgParseError(line_no, "duplicate tau header");
      Time tau = 0;
      if (!(tokens >> tau)) throw TgParseError(line_no, "tau header needs an integer");
      declared_tau = tau;
      continue;
    }
    std::string second;
    if (!(tokens >> second)) {
      throw TgParseError(line_no, "expected '<tail> <head> <t_start> <t_arrive>'");
    }
    Time s = 0, t = 0;
    if (!(tokens >> s >> t)) {
      // Two-token lines are the generator sidecar.
      if (first == "root") {
        root_label = second;
        continue;
      }
      if (first == "k") {
        try {
          arc_budget = std::stoll(second);
        } catch (const std::exception&) {
          throw TgParseError(line_no, "k sidecar needs an integer");
        }
        continue;
      }
      throw TgParseError(line_no, "expected '<tail> <head> <t_start> <t_arrive>'");
    }
    std::string extra;
    if (tokens >> extra) throw TgParseError(line_no, "trailing token '" + extra + "'");
    arcs.push_back({intern(first), intern(second), s, t});
    saw_arc = true;
  }
  return {TemporalGraph(std::move(labels), std::move(arcs), declared_tau),
          std::move(root_label), arc_budget};
}

TgInstance read_tg_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_tg_instance(in);
}

TemporalGraph read_tg(std::istream& in) { return read_tg_instance(in).graph; }

TemporalGraph read_tg_file(const std::string& path) {
  return read_tg_instance_file(path).graph;
}

void write_tg(std::ostream& out, const TemporalGraph& graph) {
  out << "tau " << graph.lifetime() << "\n";
  for (const TemporalArc& a : graph.arcs()) {
    out << graph.label(a.tail) << ' ' << graph.label(a.head) << ' ' << a.t_start
        << ' ' << a.t_arrive << "\n";
  }
}

void write_tg_file(const std::string& path, const TemporalGraph& graph) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_tg(out, graph);
}

}  // namespace tgb

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tgb/temporal_graph.hpp"

namespace tgb {

// Text graph format (".tg"):
//   - comment lines start with '#'
//   - an optional header line "tau <int>"
//   - one arc per line: "<tail> <head> <t_start> <t_arrive>"
// Vertex names are arbitrary non-whitespace tokens; internal ids are assigned
// by first appearance. A declared tau smaller than the largest arrival time
// is reported by validate(), not here.
//
// Reduction generators append sidecar lines "root <name>" and "k <int>";
// read_tg_instance recovers them, read_tg skips them.
class TgParseError : public std::runtime_error {
 public:
  TgParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct TgInstance {
  TemporalGraph graph;
  std::optional<std::string> root_label;
  std::optional<std::int64_t> arc_budget;
};

TgInstance read_tg_instance(std::istream& in);
TgInstance read_tg_instance_file(const std::string& path);

TemporalGraph read_tg(std::istream& in);
TemporalGraph read_tg_file(const std::string& path);

void write_tg(std::ostream& out, const TemporalGraph& graph);
void write_tg_file(const std::string& path, const TemporalGraph& graph);

}  // namespace tgb

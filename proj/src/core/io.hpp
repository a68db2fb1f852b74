#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "colored.hpp"

namespace interdep {

// Line-oriented text formats, LF-terminated, space-separated, ids 0-based.
//
// Colored graph:          Dependency system:
//   n m n_c                 system one_way|bidirectional
//   u v        (m lines)    demand n1 m1
//   v c        (n lines)    u v              (m1 lines)
//                           supply n2 [m2]   (edge lines follow only with m2)
//                           dep u -> s1 s2 ...   (n1 lines)
//
// Writers emit edges in canonical order and supply lists ascending, so equal
// models serialize to identical bytes. Parse failures raise Errc::parse with
// the offending line number.
ColoredGraph read_colored_graph(std::istream& in);
DependencySystem read_system(std::istream& in);
void write_colored_graph(const ColoredGraph& cg, std::ostream& out);
void write_system(const DependencySystem& sys, std::ostream& out);

using Model = std::variant<ColoredGraph, DependencySystem>;

// Picks the schema from the first line: a bare integer starts a colored
// graph, the word "system" starts a dependency system.
Model read_model(std::istream& in);
Model read_model_file(const std::string& path);

void write_colored_graph_file(const ColoredGraph& cg, const std::string& path);
void write_system_file(const DependencySystem& sys, const std::string& path);

}  // namespace interdep

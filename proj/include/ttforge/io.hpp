#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ttforge/decomposition.hpp"
#include "ttforge/ltt.hpp"
#include "ttforge/rose_map.hpp"

namespace ttf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

// `a -> abA` or `x1 -> x1 X2` lines, optional `rank: r`
RoseMap parse_automorphism(const std::string& text);
std::string write_automorphism(const RoseMap& g);

// `rank:`, `red_vertex: x<k>`, `red_edge: x<k> x<l>`, `purple_edge: x<k> x<l>` or `purple_edge: complete`
LttStructure parse_ltt(const std::string& text);
std::string write_ltt(const LttStructure& G);

struct DecompFile {
  Decomposition decomposition;
  bool prefix = false;  // `mode: prefix`
  std::optional<Turn> final_turn;  // `final_turn: A b`, prefix mode only
};
// `fold: a -> c a` lines, `structure: k` blocks in ltt format, `expect: a -> ...` lines
DecompFile parse_decomposition(const std::string& text);
std::string write_decomposition(const Decomposition& d);

// text kinds, decided by the keys present
enum class FileKind { automorphism, decomposition, ltt };
FileKind sniff(const std::string& text);

Dir parse_direction(const std::string& tok);      // a, A, x<k>, X<k>, e<k>, E<k> (edges)
Dir parse_vertex_label(const std::string& tok);   // x<label> (directions)
SmoothPath parse_path_spec(const std::string& spec);  // x<label> or bare labels

}  // namespace ttf

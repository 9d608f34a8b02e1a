#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ttf {

// A direction is a signed edge index: +k is E_k, -k is its inverse.
using Dir = int;
using Word = std::vector<Dir>;

inline Dir bar(Dir d) { return -d; }
inline int edge_of(Dir d) { return d < 0 ? -d : d; }

// x_{2k-1} = +k, x_{2k} = -k; index = label - 1
inline int dir_index(Dir d) { return d > 0 ? 2 * d - 2 : -2 * d - 1; }
inline Dir dir_from_index(int i) { return (i % 2 == 0) ? i / 2 + 1 : -(i / 2 + 1); }
inline int x_label(Dir d) { return dir_index(d) + 1; }
inline Dir from_x_label(int k) { return dir_from_index(k - 1); }

struct Turn {
  Dir a = 0, b = 0;  // normalized: dir_index(a) <= dir_index(b)
  Turn() = default;
  Turn(Dir x, Dir y) : a(x), b(y) {
    if (dir_index(a) > dir_index(b)) std::swap(a, b);
  }
  bool degenerate() const { return a == b; }
  bool contains(Dir d) const { return a == d || b == d; }
  Dir other(Dir d) const { return a == d ? b : a; }
  bool operator==(const Turn& o) const { return a == o.a && b == o.b; }
  bool operator<(const Turn& o) const {
    int x = dir_index(a), y = dir_index(o.a);
    if (x != y) return x < y;
    return dir_index(b) < dir_index(o.b);
  }
};

Word tighten(const Word& w);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);  // reduced concatenation
bool is_reduced(const Word& w);
std::vector<Turn> turns_of(const Word& w);  // throws on unreduced input

// Syntax A: a..z / A..Z.  Syntax B: x<k> / X<k> tokens.
Word parse_word(std::string_view s);
bool looks_like_syntax_b(std::string_view s);
std::string format_word(const Word& w, int rank);  // A when rank <= 26
std::string format_word_b(const Word& w);
std::string format_dir(Dir d, int rank);
std::string format_turn(const Turn& t, int rank);
std::string format_x(Dir d);  // x<label> vertex naming used by ltt files

}  // namespace ttf

#include "ttforge/words.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>

namespace ttf {

Word tighten(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Dir d : w) {
    if (d == 0) throw std::invalid_argument("zero letter");
    if (!out.empty() && out.back() == -d)
      out.pop_back();
    else
      out.push_back(d);
  }
  return out;
}

Word invert(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Dir& d : out) d = -d;
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  for (Dir d : v) {
    if (!out.empty() && out.back() == -d)
      out.pop_back();
    else
      out.push_back(d);
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

std::vector<Turn> turns_of(const Word& w) {
  std::vector<Turn> out;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    Turn t(-w[i], w[i + 1]);
    if (t.degenerate()) throw std::invalid_argument("turns_of: unreduced word");
    out.push_back(t);
  }
  return out;
}

bool looks_like_syntax_b(std::string_view s) {
  static const std::regex tok(R"(\s*[xX]\d+(\s+[xX]\d+)*\s*)");
  return std::regex_match(s.begin(), s.end(), tok);
}

Word parse_word(std::string_view s) {
  Word w;
  if (looks_like_syntax_b(s)) {
    size_t i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
      bool inv = s[i] == 'X';
      ++i;
      int k = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) k = k * 10 + (s[i++] - '0');
      if (k == 0) throw std::invalid_argument("bad edge index in word");
      w.push_back(inv ? -k : k);
    }
    return w;
  }
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c >= 'a' && c <= 'z')
      w.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z')
      w.push_back(-(c - 'A' + 1));
    else
      throw std::invalid_argument(std::string("bad letter '") + c + "'");
  }
  return w;
}

std::string format_dir(Dir d, int rank) {
  if (rank <= 26) return std::string(1, d > 0 ? char('a' + d - 1) : char('A' - d - 1));
  return (d > 0 ? "x" : "X") + std::to_string(edge_of(d));
}

std::string format_word(const Word& w, int rank) {
  if (rank > 26) return format_word_b(w);
  std::string s;
  for (Dir d : w) s += format_dir(d, rank);
  return s;
}

std::string format_word_b(const Word& w) {
  std::string s;
  for (Dir d : w) {
    if (!s.empty()) s += ' ';
    s += (d > 0 ? "x" : "X") + std::to_string(edge_of(d));
  }
  return s;
}

std::string format_turn(const Turn& t, int rank) {
  return "{" + format_dir(t.a, rank) + "," + format_dir(t.b, rank) + "}";
}

std::string format_x(Dir d) { return "x" + std::to_string(x_label(d)); }

}  // namespace ttf

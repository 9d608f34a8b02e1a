#include "ttforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace ttf {

namespace {

std::string trim(std::string s) {
  auto c = s.find('#');
  if (c != std::string::npos) s.erase(c);
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// key: value, or empty key for arrow lines
bool split_key(const std::string& line, std::string& key, std::string& value) {
  static const std::regex kv(R"(^([a-z_]+)\s*:\s*(.*)$)");
  std::smatch m;
  if (!std::regex_match(line, m, kv)) return false;
  key = m[1];
  value = m[2];
  return true;
}

std::pair<Dir, Word> parse_arrow(const std::string& s, int lineno) {
  auto p = s.find("->");
  if (p == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected '->'");
  std::string lhs = trim(s.substr(0, p)), rhs = trim(s.substr(p + 2));
  Dir d = parse_direction(lhs);
  Word w;
  auto toks = tokens(rhs);
  bool all_tokens = !toks.empty();
  for (auto& t : toks)
    if (!std::regex_match(t, std::regex(R"([xXeE]\d+)"))) all_tokens = false;
  if (all_tokens)
    for (auto& t : toks) w.push_back(parse_direction(t));
  else
    w = parse_word(rhs);
  return {d, w};
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dir parse_direction(const std::string& tok) {
  static const std::regex b(R"(([xXeE])(\d+))");
  std::smatch m;
  if (std::regex_match(tok, m, b)) {
    int k = std::stoi(m[2]);
    if (k < 1) throw ParseError("bad edge index in '" + tok + "'");
    return (m[1] == "x" || m[1] == "e") ? k : -k;
  }
  if (tok.size() == 1 && std::isalpha(static_cast<unsigned char>(tok[0]))) return parse_word(tok).front();
  throw ParseError("bad direction '" + tok + "'");
}

Dir parse_vertex_label(const std::string& tok) {
  static const std::regex x(R"(x(\d+))");
  std::smatch m;
  if (!std::regex_match(tok, m, x)) throw ParseError("bad vertex '" + tok + "', expected x<k>");
  int k = std::stoi(m[1]);
  if (k < 1) throw ParseError("bad vertex '" + tok + "'");
  return from_x_label(k);
}

RoseMap parse_automorphism(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int rank = 0, lineno = 0;
  std::map<int, Word> im;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    std::string key, val;
    if (split_key(line, key, val)) {
      if (key == "rank") rank = std::stoi(val);
      else throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      continue;
    }
    auto [d, w] = parse_arrow(line, lineno);
    if (d < 0) throw ParseError("line " + std::to_string(lineno) + ": left side must be a positive edge");
    if (im.count(d)) throw ParseError("line " + std::to_string(lineno) + ": edge given twice");
    im[d] = w;
  }
  if (im.empty()) throw ParseError("no edge images");
  int maxe = im.rbegin()->first;
  if (rank == 0) rank = maxe;
  std::vector<Word> images;
  for (int k = 1; k <= rank; ++k) {
    if (!im.count(k)) throw ParseError("missing image for edge " + std::to_string(k));
    images.push_back(im[k]);
  }
  try {
    return RoseMap(rank, images);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string write_automorphism(const RoseMap& g) {
  std::ostringstream os;
  os << "rank: " << g.rank() << "\n";
  for (int k = 1; k <= g.rank(); ++k) os << format_dir(k, g.rank()) << " -> " << format_word(g.image(k), g.rank()) << "\n";
  return os.str();
}

namespace {

struct LttBuilder {
  int rank = 0;
  std::vector<Dir> red;
  std::vector<Turn> red_edges, purple;
  bool complete = false;

  bool take(const std::string& key, const std::string& val, int lineno) {
    auto t = tokens(val);
    auto need = [&](size_t n) {
      if (t.size() != n) throw ParseError("line " + std::to_string(lineno) + ": '" + key + "' expects " + std::to_string(n) + " vertices");
    };
    if (key == "rank") { rank = std::stoi(val); return true; }
    if (key == "red_vertex") { need(1); red.push_back(parse_vertex_label(t[0])); return true; }
    if (key == "red_edge") { need(2); red_edges.push_back(Turn(parse_vertex_label(t[0]), parse_vertex_label(t[1]))); return true; }
    if (key == "purple_edge") {
      if (t.size() == 1 && t[0] == "complete") { complete = true; return true; }
      need(2);
      purple.push_back(Turn(parse_vertex_label(t[0]), parse_vertex_label(t[1])));
      return true;
    }
    return false;
  }

  LttStructure build(int fallback_rank) const {
    LttStructure G;
    G.rank = rank ? rank : fallback_rank;
    if (G.rank < 1) throw ParseError("ltt data needs a rank");
    G.vertex.assign(2 * G.rank, Color::purple);
    auto check = [&](Dir d) {
      if (edge_of(d) > G.rank) throw ParseError("vertex " + format_x(d) + " out of range");
    };
    for (Dir d : red) { check(d); G.vertex[dir_index(d)] = Color::red; }
    for (auto& e : red_edges) { check(e.a); check(e.b); G.edges.push_back({e, Color::red}); }
    for (auto& e : purple) { check(e.a); check(e.b); G.edges.push_back({e, Color::purple}); }
    if (complete) {
      for (int x = 0; x < 2 * G.rank; ++x)
        for (int y = x + 1; y < 2 * G.rank; ++y)
          if (G.vertex[x] == Color::purple && G.vertex[y] == Color::purple)
            G.edges.push_back({Turn(dir_from_index(x), dir_from_index(y)), Color::purple});
    }
    G.normalize();
    return G;
  }
};

}  // namespace

LttStructure parse_ltt(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  LttBuilder b;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    std::string key, val;
    if (!split_key(line, key, val) || !b.take(key, val, lineno))
      throw ParseError("line " + std::to_string(lineno) + ": unexpected '" + line + "'");
  }
  return b.build(0);
}

std::string write_ltt(const LttStructure& G) {
  std::ostringstream os;
  os << "rank: " << G.rank << "\n";
  for (size_t i = 0; i < G.vertex.size(); ++i)
    if (G.vertex[i] == Color::red) os << "red_vertex: " << format_x(dir_from_index(static_cast<int>(i))) << "\n";
  for (auto& e : G.edges)
    if (e.color == Color::red) os << "red_edge: " << format_x(e.turn.a) << " " << format_x(e.turn.b) << "\n";
  // shorthand when the purple part is complete on the purple vertices
  int np = 0;
  for (Color c : G.vertex) np += c == Color::purple;
  auto pe = G.purple_edges();
  if (static_cast<int>(pe.size()) == np * (np - 1) / 2 && pe.size() == static_cast<size_t>(std::count_if(G.edges.begin(), G.edges.end(), [](const ColoredEdge& e) { return e.color == Color::purple; }))) {
    os << "purple_edge: complete\n";
  } else {
    for (auto& e : G.edges)
      if (e.color == Color::purple) os << "purple_edge: " << format_x(e.turn.a) << " " << format_x(e.turn.b) << "\n";
  }
  return os.str();
}

DecompFile parse_decomposition(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  DecompFile out;
  Decomposition& d = out.decomposition;
  std::vector<std::pair<int, LttBuilder>> blocks;
  std::map<int, Word> expect;
  bool in_block = false;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    std::string key, val;
    if (!split_key(line, key, val)) throw ParseError("line " + std::to_string(lineno) + ": unexpected '" + line + "'");
    if (key == "rank") { d.rank = std::stoi(val); continue; }
    if (key == "mode") {
      if (val != "prefix" && val != "cyclic") throw ParseError("line " + std::to_string(lineno) + ": mode is prefix or cyclic");
      out.prefix = val == "prefix";
      continue;
    }
    if (key == "final_turn") {
      auto t = tokens(val);
      if (t.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": final_turn needs two directions");
      out.final_turn = Turn(parse_direction(t[0]), parse_direction(t[1]));
      continue;
    }
    if (key == "fold") {
      in_block = false;
      auto [jd, w] = parse_arrow(val, lineno);
      if (w.size() != 2 || w[1] != jd) throw ParseError("line " + std::to_string(lineno) + ": fold must read 'e -> f e'");
      d.folds.push_back({jd, w[0]});
      continue;
    }
    if (key == "expect") {
      in_block = false;
      auto [e, w] = parse_arrow(val, lineno);
      if (e < 0) throw ParseError("line " + std::to_string(lineno) + ": expect needs a positive edge");
      expect[e] = w;
      continue;
    }
    if (key == "structure") {
      blocks.push_back({std::stoi(val), LttBuilder{}});
      in_block = true;
      continue;
    }
    if (in_block && blocks.back().second.take(key, val, lineno)) continue;
    throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  if (d.rank == 0) {
    for (auto& f : d.folds) d.rank = std::max({d.rank, edge_of(f.i), edge_of(f.j)});
  }
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].first != static_cast<int>(k)) throw ParseError("structure blocks must be numbered 0, 1, ... in order");
    d.structures.push_back(blocks[k].second.build(d.rank));
  }
  if (!expect.empty()) {
    std::vector<Word> im;
    for (int k = 1; k <= d.rank; ++k) {
      if (!expect.count(k)) throw ParseError("expect lines must cover every edge");
      im.push_back(expect[k]);
    }
    d.expected = RoseMap(d.rank, im);
  }
  return out;
}

std::string write_decomposition(const Decomposition& d) {
  std::ostringstream os;
  os << "rank: " << d.rank << "\n";
  for (auto& f : d.folds)
    os << "fold: " << format_dir(f.j, d.rank) << " -> " << format_dir(f.i, d.rank) << " " << format_dir(f.j, d.rank) << "\n";
  for (size_t k = 0; k < d.structures.size(); ++k) {
    os << "structure: " << k << "\n";
    std::istringstream body(write_ltt(d.structures[k]));
    std::string l;
    while (std::getline(body, l))
      if (l.rfind("rank:", 0) != 0) os << "  " << l << "\n";
  }
  if (d.expected)
    for (int k = 1; k <= d.rank; ++k)
      os << "expect: " << format_dir(k, d.rank) << " -> " << format_word(d.expected->image(k), d.rank) << "\n";
  return os.str();
}

FileKind sniff(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  bool ltt = false;
  while (std::getline(is, line)) {
    line = trim(line);
    std::string key, val;
    if (!split_key(line, key, val)) continue;
    if (key == "fold") return FileKind::decomposition;
    if (key == "red_vertex" || key == "red_edge" || key == "purple_edge") ltt = true;
  }
  return ltt ? FileKind::ltt : FileKind::automorphism;
}

SmoothPath parse_path_spec(const std::string& spec) {
  std::string s = spec;
  for (char& c : s)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  SmoothPath p;
  static const std::regex bare(R"(\d+)");
  for (auto& t : tokens(s)) p.v.push_back(std::regex_match(t, bare) ? from_x_label(std::stoi(t)) : parse_vertex_label(t));
  if (p.v.size() < 2) throw ParseError("path needs at least two vertices");
  return p;
}

}  // namespace ttf

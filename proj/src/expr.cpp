#include "mdimlab/expr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "mdimlab/error.hpp"
#include "mdimlab/imprimitivity.hpp"

namespace mdimlab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph graph() {
    const std::string name = identifier();
    if (name == "file") return load_graph(path());
    if (peek('(')) {
      if (name == "incidence") return incidence_graph(inner_design()).graph;
      if (name == "double") return bipartite_double(inner_graph()).graph;
      if (name == "taylor") return taylor(inner_graph()).graph;
      if (name == "fold") {
        const Graph g = inner_graph();
        return fold(g, antipodal_structure(g, bfs_distances(g))).folded;
      }
      if (name == "halfplus") return halve(inner_graph()).plus.graph;
      if (name == "halfminus") return halve(inner_graph()).minus.graph;
      fail("unknown graph operation '" + name + "'");
    }
    return family(name, params());
  }

  LabeledCover cover() {
    const std::string name = identifier();
    if (!peek('(')) fail("expected double(...), taylor(...) or incidence(...)");
    if (name == "incidence") return incidence_graph(inner_design());
    if (name == "double") return bipartite_double(inner_graph());
    if (name == "taylor") return taylor(inner_graph());
    fail("'" + name + "' does not build a labelled cover");
  }

  SymmetricDesign design() {
    const std::string name = identifier();
    if (name == "file") return load_design(path());
    if (peek('(')) {
      if (name == "dual") return design_dual(inner_design());
      if (name == "complement") return design_complement(inner_design());
      if (name == "design") return design_from_graph(inner_graph());
      fail("unknown design operation '" + name + "'");
    }
    const std::vector<int> p = params();
    if (name == "pg2" && p.size() == 1) return pg2(p[0]);
    if (name == "trivial" && p.size() == 1) return trivial_design(p[0]);
    fail("unknown design '" + name + "'");
  }

  void finish() {
    if (pos_ != text_.size()) fail("unexpected trailing text");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0)) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<int> params() {
    std::vector<int> out;
    while (peek(':')) {
      ++pos_;
      int value = 0;
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr == first) fail("expected an integer");
      pos_ += static_cast<std::size_t>(ptr - first);
      out.push_back(value);
    }
    return out;
  }

  std::string path() {
    expect(':');
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
    if (start == pos_) fail("expected a path");
    return std::string(text_.substr(start, pos_ - start));
  }

  Graph inner_graph() {
    expect('(');
    Graph g = graph();
    expect(')');
    return g;
  }

  SymmetricDesign inner_design() {
    expect('(');
    SymmetricDesign d = design();
    expect(')');
    return d;
  }

  Graph family(const std::string& name, const std::vector<int>& p) {
    auto arity = [&](std::size_t n) {
      if (p.size() != n) fail("'" + name + "' takes " + std::to_string(n) + " parameter(s)");
    };
    if (name == "cycle") return arity(1), cycle(p[0]);
    if (name == "complete") return arity(1), complete(p[0]);
    if (name == "multipartite") return arity(2), complete_multipartite(p[0], p[1]);
    if (name == "kvv") return arity(1), complete_bipartite_minus_matching(p[0]);
    if (name == "hypercube") return arity(1), hypercube(p[0]);
    if (name == "johnson") return arity(2), johnson(p[0], p[1]);
    if (name == "kneser") return arity(2), kneser(p[0], p[1]);
    if (name == "odd") return arity(1), odd_graph(p[0]);
    if (name == "paley") return arity(1), paley(p[0]);
    if (name == "rook") return arity(2), rook(p[0], p[1]);
    if (name == "shrikhande") return arity(0), shrikhande();
    if (name == "gq22") return arity(0), gq22_incidence();
    if (name == "petersen") return arity(0), odd_graph(3);
    if (name == "icosahedron") return arity(0), taylor(cycle(5)).graph;
    if (name == "heawood") return arity(0), incidence_graph(pg2(2)).graph;
    fail("unknown family '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph(std::string_view expr) {
  Parser p(expr);
  Graph g = p.graph();
  p.finish();
  return g;
}

SymmetricDesign parse_design(std::string_view expr) {
  Parser p(expr);
  SymmetricDesign d = p.design();
  p.finish();
  return d;
}

LabeledCover parse_cover(std::string_view expr) {
  Parser p(expr);
  LabeledCover c = p.cover();
  p.finish();
  return c;
}

}  // namespace mdimlab

#include "ybe/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ybe {

namespace {

class Lines {
 public:
  explicit Lines(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      _lines.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  [[noreturn]] void error(std::string const& what) const {
    fail(ErrorCode::ParseError, "line " + std::to_string(_pos) + ": " + what);
  }

  std::string_view next() {
    if (_pos >= _lines.size()) {
      ++_pos;
      error("unexpected end of file");
    }
    return _lines[_pos++];
  }

  std::vector<std::string_view> tokens() {
    auto line = next();
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = line.find(' ', i);
      if (j == std::string_view::npos) j = line.size();
      out.push_back(line.substr(i, j - i));
      i = j;
    }
    return out;
  }

  std::size_t number(std::string_view tok) const {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      error("expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return v;
  }

  void blank() {
    if (!next().empty()) error("expected a blank line");
  }

  void end() {
    while (_pos < _lines.size()) {
      if (!_lines[_pos].empty()) {
        ++_pos;
        error("trailing content");
      }
      ++_pos;
    }
  }

  // `rows` lines of `cols` entries, each below `bound`.
  Table table(std::size_t rows, std::size_t cols, std::size_t bound) {
    Table t;
    t.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      auto toks = tokens();
      if (toks.size() != cols) {
        error("expected " + std::to_string(cols) + " entries, got " +
              std::to_string(toks.size()));
      }
      for (auto tok : toks) {
        std::size_t v = number(tok);
        if (v >= bound) error("entry " + std::to_string(v) + " out of range");
        t.push_back(Element(v));
      }
    }
    return t;
  }

  std::vector<std::size_t> header(std::string_view magic, std::size_t numbers,
                                  std::string* trailing = nullptr) {
    auto toks = tokens();
    std::size_t want = 2 + numbers + (trailing ? 1 : 0);
    if (toks.size() < 2 || toks[0] != magic || toks[1] != "v1") {
      error("expected header '" + std::string(magic) + " v1'");
    }
    if (toks.size() != want) error("malformed header");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < numbers; ++i) {
      out.push_back(number(toks[2 + i]));
      if (out.back() == 0 || out.back() > kMaxGroupOrder) error("size out of range");
    }
    if (trailing) *trailing = std::string(toks.back());
    return out;
  }

 private:
  std::vector<std::string_view> _lines;
  std::size_t _pos = 0;
};

void put_table(std::ostringstream& os, std::size_t rows, std::size_t cols, Table const& t) {
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) os << ' ';
      os << t[r * cols + c];
    }
    os << '\n';
  }
}

}  // namespace

RawGroup parse_group(std::string_view text) {
  Lines in(text);
  RawGroup g;
  g.order = in.header("GROUP", 1, &g.name)[0];
  g.table = in.table(g.order, g.order, g.order);
  in.end();
  return g;
}

RawAction parse_action(std::string_view text) {
  Lines in(text);
  auto h = in.header("ACTION", 2);
  RawAction a{h[0], h[1], in.table(h[0], h[1], h[1])};
  in.end();
  return a;
}

RawBrace parse_brace(std::string_view text) {
  Lines in(text);
  RawBrace b;
  b.order = in.header("BRACE", 1)[0];
  b.star = in.table(b.order, b.order, b.order);
  in.blank();
  b.dot = in.table(b.order, b.order, b.order);
  in.end();
  return b;
}

RawBracoid parse_bracoid(std::string_view text) {
  Lines in(text);
  RawBracoid b;
  auto h = in.header("BRACOID", 2);
  b.g_order = h[0];
  b.n_order = h[1];
  b.g = in.table(b.g_order, b.g_order, b.g_order);
  in.blank();
  b.n = in.table(b.n_order, b.n_order, b.n_order);
  in.blank();
  b.act = in.table(b.g_order, b.n_order, b.n_order);
  in.end();
  return b;
}

RawSemibrace parse_semibrace(std::string_view text) {
  Lines in(text);
  RawSemibrace s;
  s.order = in.header("SEMIBRACE", 1)[0];
  s.dot = in.table(s.order, s.order, s.order);
  in.blank();
  s.plus = in.table(s.order, s.order, s.order);
  in.end();
  return s;
}

SolutionMap parse_solution(std::string_view text) {
  Lines in(text);
  SolutionMap r;
  r.size = in.header("YBE", 1, &r.provenance)[0];
  std::size_t n = r.size;
  r.left.resize(n * n);
  r.right.resize(n * n);
  auto rows = in.table(n * n, 4, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (rows[4 * i] != i / n || rows[4 * i + 1] != i % n) {
      fail(ErrorCode::ParseError, "line " + std::to_string(i + 2) + ": pairs out of order");
    }
    r.left[i] = rows[4 * i + 2];
    r.right[i] = rows[4 * i + 3];
  }
  in.end();
  return r;
}

std::string format_group(FiniteGroup const& g) {
  std::ostringstream os;
  os << "GROUP v1 " << g.order() << ' ' << g.name() << '\n';
  put_table(os, g.order(), g.order(), g.table());
  return os.str();
}

std::string format_action(GroupAction const& a) {
  std::ostringstream os;
  os << "ACTION v1 " << a.actor_order << ' ' << a.points << '\n';
  put_table(os, a.actor_order, a.points, a.table);
  return os.str();
}

std::string format_brace(SkewBrace const& b) {
  std::ostringstream os;
  std::size_t n = b.order();
  os << "BRACE v1 " << n << '\n';
  put_table(os, n, n, b.star().table());
  os << '\n';
  put_table(os, n, n, b.dot().table());
  return os.str();
}

std::string format_bracoid(SkewBracoid const& b) {
  std::ostringstream os;
  std::size_t ng = b.g.order(), nn = b.n.order();
  os << "BRACOID v1 " << ng << ' ' << nn << '\n';
  put_table(os, ng, ng, b.g.table());
  os << '\n';
  put_table(os, nn, nn, b.n.table());
  os << '\n';
  put_table(os, ng, nn, b.act.table);
  return os.str();
}

std::string format_semibrace(Semibrace const& sb) {
  std::ostringstream os;
  std::size_t n = sb.order();
  os << "SEMIBRACE v1 " << n << '\n';
  put_table(os, n, n, sb.dot().table());
  os << '\n';
  put_table(os, n, n, sb.plus_table());
  return os.str();
}

std::string format_solution(SolutionMap const& r) {
  std::ostringstream os;
  std::size_t n = r.size;
  os << "YBE v1 " << n << ' ' << r.provenance << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      os << x << ' ' << y << ' ' << r.left[x * n + y] << ' ' << r.right[x * n + y] << '\n';
    }
  }
  return os.str();
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(std::filesystem::path const& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

}  // namespace ybe

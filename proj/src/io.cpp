// Line-based parsers and writers for the on-disk formats.

#include "bicat/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bicat {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line, int col,
                             const std::string& msg) {
  fail(ErrKind::ParseError,
       path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
           msg,
       Witness{line, col});
}

struct Tok {
  std::string text;
  int col = 1;  // 1-based
};

std::vector<Tok> tokenize(const std::string& l) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < l.size()) {
    if (l[i] == ' ' || l[i] == '\t') {
      ++i;
      continue;
    }
    if (l[i] == '#') break;
    size_t j = i;
    while (j < l.size() && l[j] != ' ' && l[j] != '\t' && l[j] != '#') ++j;
    out.push_back(Tok{l.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

// Lines of one file with blank and comment lines transparent.
struct LineScanner {
  std::string path;
  std::vector<std::string> lines;
  size_t pos = 0;

  static LineScanner open(const std::string& path) {
    std::ifstream in(path);
    if (!in)
      fail(ErrKind::ParseError, path + ": cannot open file", Witness{0, 0});
    LineScanner sc;
    sc.path = path;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      sc.lines.push_back(line);
    }
    return sc;
  }

  size_t next_content(size_t from) const {
    while (from < lines.size() && tokenize(lines[from]).empty()) ++from;
    return from;
  }

  bool at_end() const { return next_content(pos) >= lines.size(); }

  // First word of the next content line, "" at end of file.
  std::string peek_head() const {
    const size_t i = next_content(pos);
    if (i >= lines.size()) return "";
    return tokenize(lines[i]).front().text;
  }

  std::vector<Tok> take(int& line_no) {
    const size_t i = next_content(pos);
    if (i >= lines.size())
      parse_fail(path, static_cast<int>(lines.size()) + 1, 1,
                 "unexpected end of file");
    pos = i + 1;
    line_no = static_cast<int>(i) + 1;
    return tokenize(lines[i]);
  }

  void expect_done() {
    if (at_end()) return;
    int line;
    const std::vector<Tok> toks = take(line);
    parse_fail(path, line, toks.front().col,
               "unexpected content '" + toks.front().text + "'");
  }
};

int parse_int(const std::string& path, int line, const Tok& t, int low,
              int high, const char* what) {
  int v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [p, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc{} || p != end)
    parse_fail(path, line, t.col,
               std::string("expected ") + what + ", got '" + t.text + "'");
  if (v < low || v >= high)
    parse_fail(path, line, t.col,
               std::string(what) + " " + t.text + " out of range [" +
                   std::to_string(low) + ", " + std::to_string(high) + ")");
  return v;
}

std::vector<elem> parse_row(LineScanner& sc, int n, elem bound,
                            const char* what) {
  int line;
  const std::vector<Tok> toks = sc.take(line);
  if (static_cast<int>(toks.size()) != n)
    parse_fail(sc.path, line, toks.back().col,
               "expected " + std::to_string(n) + " entries, got " +
                   std::to_string(toks.size()));
  std::vector<elem> row(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    row[static_cast<size_t>(k)] =
        parse_int(sc.path, line, toks[static_cast<size_t>(k)], 0, bound, what);
  return row;
}

// Header line made of fixed words, e.g. "endo s".
void expect_header(LineScanner& sc, std::initializer_list<const char*> words) {
  int line;
  const std::vector<Tok> toks = sc.take(line);
  std::string wanted;
  for (const char* w : words) {
    if (!wanted.empty()) wanted += ' ';
    wanted += w;
  }
  size_t k = 0;
  for (const char* w : words) {
    if (k >= toks.size() || toks[k].text != w)
      parse_fail(sc.path, line, k < toks.size() ? toks[k].col : toks.back().col,
                 "expected '" + wanted + "'");
    ++k;
  }
  if (toks.size() != k)
    parse_fail(sc.path, line, toks[k].col, "expected '" + wanted + "'");
}

std::string resolve_ref(const std::string& container, const std::string& ref) {
  if (!ref.empty() && ref.front() == '/') return ref;
  const size_t cut = container.find_last_of('/');
  if (cut == std::string::npos) return ref;
  return container.substr(0, cut + 1) + ref;
}

// `group <role> <group-file>`: loads the referenced file.
GroupPtr parse_group_ref(LineScanner& sc, const char* role) {
  int line;
  const std::vector<Tok> toks = sc.take(line);
  if (toks.size() != 3 || toks[0].text != "group" || toks[1].text != role)
    parse_fail(sc.path, line, toks.front().col,
               std::string("expected 'group ") + role + " <group-file>'");
  return load_group_file(resolve_ref(sc.path, toks[2].text));
}

void write_table_rows(std::ostringstream& out, const std::vector<elem>& table,
                      int row_len) {
  for (size_t i = 0; i < table.size(); ++i) {
    out << table[i];
    out << ((static_cast<int>(i) % row_len == row_len - 1) ? '\n' : ' ');
  }
}

}  // namespace

GroupPtr load_group_file(const std::string& path) {
  LineScanner sc = LineScanner::open(path);
  int line;
  const std::vector<Tok> toks = sc.take(line);
  if (toks.size() != 3 || toks[0].text != "group")
    parse_fail(path, line, toks.front().col, "expected 'group <name> <order>'");
  const std::string name = toks[1].text;
  // Orders beyond a few thousand are outside what any exhaustive check here
  // could touch, so treat them as malformed input rather than allocating.
  const int order = parse_int(path, line, toks[2], 1, 4097, "group order");
  std::vector<elem> table;
  table.reserve(static_cast<size_t>(order) * order);
  for (int r = 0; r < order; ++r) {
    const std::vector<elem> row = parse_row(sc, order, order, "element index");
    table.insert(table.end(), row.begin(), row.end());
  }
  sc.expect_done();
  try {
    return FiniteGroup::validate(std::move(table), order, name);
  } catch (const EngineError& e) {
    parse_fail(path, 2, 1,
               std::string("operation table is not a group (") + e.what() +
                   ")");
  }
}

std::string write_group_file(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group " << g.name() << ' ' << g.order() << '\n';
  write_table_rows(out, g.table(), g.order());
  return out.str();
}

BicatData load_structure_file(const std::string& path) {
  LineScanner sc = LineScanner::open(path);
  BicatData d;
  d.X = parse_group_ref(sc, "X");
  d.B = parse_group_ref(sc, "B");
  const elem nx = d.X->order();
  const elem nb = d.B->order();
  expect_header(sc, {"hom", "h"});
  d.h = parse_row(sc, nx, nb, "image index");
  expect_header(sc, {"endo", "s"});
  d.s = parse_row(sc, nx, nx, "image index");
  expect_header(sc, {"endo", "t"});
  d.t = parse_row(sc, nx, nx, "image index");
  expect_header(sc, {"endo", "lambda"});
  d.lambda = parse_row(sc, nx, nx, "image index");
  expect_header(sc, {"endo", "rho"});
  d.rho = parse_row(sc, nx, nx, "image index");
  expect_header(sc, {"action", "xi"});
  d.xi.reserve(static_cast<size_t>(nb) * nx);
  for (elem b = 0; b < nb; ++b) {
    const std::vector<elem> row = parse_row(sc, nx, nx, "image index");
    d.xi.insert(d.xi.end(), row.begin(), row.end());
  }
  sc.expect_done();
  return d;
}

std::string write_structure_file(const BicatData& d, const std::string& x_ref,
                                 const std::string& b_ref) {
  std::ostringstream out;
  out << "group X " << x_ref << '\n';
  out << "group B " << b_ref << '\n';
  out << "hom h\n";
  write_table_rows(out, d.h, d.X->order());
  out << "endo s\n";
  write_table_rows(out, d.s, d.X->order());
  out << "endo t\n";
  write_table_rows(out, d.t, d.X->order());
  out << "endo lambda\n";
  write_table_rows(out, d.lambda, d.X->order());
  out << "endo rho\n";
  write_table_rows(out, d.rho, d.X->order());
  out << "action xi\n";
  write_table_rows(out, d.xi, d.X->order());
  return out.str();
}

ExtendedData load_extended_file(const std::string& path) {
  LineScanner sc = LineScanner::open(path);
  ExtendedData e;
  e.Y = parse_group_ref(sc, "Y");
  e.Z = parse_group_ref(sc, "Z");
  e.B = parse_group_ref(sc, "B");
  const elem ny = e.Y->order();
  const elem nz = e.Z->order();
  const elem nb = e.B->order();
  expect_header(sc, {"hom", "d1"});
  e.d1 = parse_row(sc, ny, nz, "image index");
  expect_header(sc, {"hom", "d0"});
  e.d0 = parse_row(sc, nz, nb, "image index");
  expect_header(sc, {"hom", "lambda0"});
  e.lambda0 = parse_row(sc, nz, ny, "image index");
  expect_header(sc, {"hom", "rho0"});
  e.rho0 = parse_row(sc, nz, ny, "image index");
  expect_header(sc, {"action", "phi"});
  e.phi.reserve(static_cast<size_t>(nz) * ny);
  for (elem z = 0; z < nz; ++z) {
    const std::vector<elem> row = parse_row(sc, ny, ny, "image index");
    e.phi.insert(e.phi.end(), row.begin(), row.end());
  }
  expect_header(sc, {"action", "xiX"});
  const elem nyz = ny * nz;
  e.xiX.reserve(static_cast<size_t>(nb) * nyz);
  for (elem b = 0; b < nb; ++b) {
    const std::vector<elem> row = parse_row(sc, nyz, nyz, "image index");
    e.xiX.insert(e.xiX.end(), row.begin(), row.end());
  }
  sc.expect_done();
  return e;
}

std::string write_extended_file(const ExtendedData& e, const std::string& y_ref,
                                const std::string& z_ref,
                                const std::string& b_ref) {
  std::ostringstream out;
  out << "group Y " << y_ref << '\n';
  out << "group Z " << z_ref << '\n';
  out << "group B " << b_ref << '\n';
  out << "hom d1\n";
  write_table_rows(out, e.d1, e.Y->order());
  out << "hom d0\n";
  write_table_rows(out, e.d0, e.Z->order());
  out << "hom lambda0\n";
  write_table_rows(out, e.lambda0, e.Z->order());
  out << "hom rho0\n";
  write_table_rows(out, e.rho0, e.Z->order());
  out << "action phi\n";
  write_table_rows(out, e.phi, e.Y->order());
  out << "action xiX\n";
  write_table_rows(out, e.xiX, e.Y->order() * e.Z->order());
  return out.str();
}

TripleFile load_triple_file(const std::string& path) {
  LineScanner sc = LineScanner::open(path);
  TripleFile tf;
  tf.A = parse_group_ref(sc, "A");
  const elem n = tf.A->order();

  auto find_triple = [&](const std::string& name) {
    for (size_t i = 0; i < tf.names.size(); ++i)
      if (tf.names[i] == name) return static_cast<int>(i);
    return -1;
  };
  auto read_triple_body = [&](const std::string& name, int line, int col) {
    if (find_triple(name) >= 0)
      parse_fail(path, line, col, "duplicate triple '" + name + "'");
    GpdTriple t;
    t.A = tf.A;
    expect_header(sc, {"endo", "s"});
    t.s = parse_row(sc, n, n, "image index");
    expect_header(sc, {"endo", "t"});
    t.t = parse_row(sc, n, n, "image index");
    tf.names.push_back(name);
    tf.triples.push_back(std::move(t));
  };

  while (!sc.at_end()) {
    const std::string head = sc.peek_head();
    if (head == "triple") {
      int line;
      const std::vector<Tok> toks = sc.take(line);
      if (toks.size() != 2)
        parse_fail(path, line, toks.front().col, "expected 'triple <name>'");
      read_triple_body(toks[1].text, line, toks[1].col);
    } else if (head == "endo" && tf.triples.empty()) {
      read_triple_body("main", 0, 1);
    } else if (head == "hom") {
      int line;
      const std::vector<Tok> toks = sc.take(line);
      if (toks.size() != 2)
        parse_fail(path, line, toks.front().col, "expected 'hom <name>'");
      TripleFile::TwoCellBlock cell;
      cell.name = toks[1].text;
      cell.tau = parse_row(sc, n, n, "image index");
      for (const char* which : {"source", "target"}) {
        int rline;
        const std::vector<Tok> rtoks = sc.take(rline);
        if (rtoks.size() != 2 || rtoks[0].text != which)
          parse_fail(path, rline, rtoks.front().col,
                     std::string("expected '") + which + " <triple>'");
        if (find_triple(rtoks[1].text) < 0)
          parse_fail(path, rline, rtoks[1].col,
                     "unknown triple '" + rtoks[1].text + "'");
        (which[0] == 's' ? cell.source : cell.target) = rtoks[1].text;
      }
      tf.twocells.push_back(std::move(cell));
    } else {
      int line;
      const std::vector<Tok> toks = sc.take(line);
      parse_fail(path, line, toks.front().col,
                 "expected a 'triple', 'endo s' or 'hom' block, got '" +
                     toks.front().text + "'");
    }
  }
  if (tf.triples.empty())
    parse_fail(path, static_cast<int>(sc.lines.size()) + 1, 1,
               "file defines no triple");
  return tf;
}

std::string dump_cells(const RealizedBicategory& rb) {
  nlohmann::ordered_json j;
  j["objects"] = rb.n_obj;
  j["one_cells"] = rb.n_one;
  j["two_cells"] = rb.n_two;
  j["one_dom"] = rb.one_dom;
  j["one_cod"] = rb.one_cod;
  j["two_src"] = rb.two_src;
  j["two_tgt"] = rb.two_tgt;
  j["id_one"] = rb.id_one;
  j["id_two"] = rb.id_two;
  j["vcomp"] = rb.vcomp;
  j["tensor_one"] = rb.tensor_one;
  j["tensor_two"] = rb.tensor_two;
  j["unitor_l"] = rb.unitor_l;
  j["unitor_r"] = rb.unitor_r;
  j["assoc"] = rb.assoc;
  return j.dump(1) + "\n";
}

}  // namespace bicat

#include "inrl/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "inrl/bit_matrix.hpp"
#include "inrl/derived.hpp"
#include "inrl/errors.hpp"

namespace inrl {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

using Line = std::vector<Token>;

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    Line toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      if (toks.empty() && raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      toks.push_back({std::string(raw.substr(i, j - i)), line_no, i + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::size_t line_count(std::string_view text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

constexpr std::array<std::string_view, 5> algebra_keywords{"elements", "one", "neg", "join", "fusion"};

bool is_keyword(std::string_view s) {
  return std::find(algebra_keywords.begin(), algebra_keywords.end(), s) != algebra_keywords.end();
}

struct Section {
  Token keyword;
  std::vector<Line> rows;  // for one-line sections, rows[0] holds the values
};

}  // namespace

FiniteInRL parse_algebra(std::string_view text) {
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  for (auto& line : tokenize(text)) {
    const Token& head = line.front();
    if (is_keyword(head.text)) {
      auto [it, fresh] = sections.try_emplace(head.text, Section{head, {}});
      if (!fresh) throw ParseError(head.line, head.column, "duplicate section '" + head.text + "'");
      current = &it->second;
      Line rest(line.begin() + 1, line.end());
      if (!rest.empty()) current->rows.push_back(std::move(rest));
      continue;
    }
    if (!current) throw ParseError(head.line, head.column, "expected a section keyword");
    if (current->keyword.text != "join" && current->keyword.text != "fusion")
      throw ParseError(head.line, head.column,
                       "section '" + current->keyword.text + "' takes a single line");
    current->rows.push_back(std::move(line));
  }
  const std::size_t end_line = line_count(text);
  for (std::string_view k : algebra_keywords)
    if (!sections.contains(std::string(k)))
      throw ParseError(end_line, 1, "missing section '" + std::string(k) + "'");

  const Section& el = sections.at("elements");
  if (el.rows.empty()) throw ParseError(el.keyword.line, el.keyword.column, "no elements");
  std::vector<std::string> names;
  std::map<std::string, Elem> index;
  for (const Token& t : el.rows.front()) {
    if (!index.emplace(t.text, static_cast<Elem>(names.size())).second)
      throw ParseError(t.line, t.column, "duplicate element '" + t.text + "'");
    names.push_back(t.text);
  }
  const std::size_t n = names.size();
  auto lookup = [&](const Token& t) {
    const auto it = index.find(t.text);
    if (it == index.end()) throw ParseError(t.line, t.column, "unknown element '" + t.text + "'");
    return it->second;
  };
  auto single_row = [&](const char* key, std::size_t expected) -> const Line& {
    const Section& s = sections.at(key);
    static const Line empty;
    const Line& row = s.rows.empty() ? empty : s.rows.front();
    if (row.size() != expected)
      throw ParseError(s.keyword.line, s.keyword.column,
                       std::string("section '") + key + "' has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(expected));
    return row;
  };

  const Elem one = lookup(single_row("one", 1).front());
  std::vector<Elem> neg;
  for (const Token& t : single_row("neg", n)) neg.push_back(lookup(t));

  auto table = [&](const char* key) {
    const Section& s = sections.at(key);
    std::vector<Elem> out;
    out.reserve(n * n);
    for (const Line& row : s.rows) {
      if (row.size() != n)
        throw ParseError(row.front().line, row.front().column,
                         std::string("ragged table '") + key + "': row has " +
                             std::to_string(row.size()) + " entries, expected " + std::to_string(n));
      for (const Token& t : row) out.push_back(lookup(t));
    }
    if (s.rows.size() != n)
      throw ParseError(s.keyword.line, s.keyword.column,
                       std::string("ragged table '") + key + "': " + std::to_string(s.rows.size()) +
                           " rows, expected " + std::to_string(n));
    return out;
  };
  auto join = table("join");
  auto fusion = table("fusion");
  try {
    return FiniteInRL(std::move(names), std::move(join), std::move(fusion), std::move(neg), one);
  } catch (const StructuralError& e) {
    throw ParseError(el.keyword.line, el.keyword.column, e.what());
  }
}

std::string emit_algebra(const FiniteInRL& alg) {
  const std::size_t n = alg.size();
  std::string out = "elements";
  for (Elem x = 0; x < n; ++x) out += ' ' + alg.name(x);
  out += "\none " + alg.name(alg.one()) + "\nneg";
  for (Elem x = 0; x < n; ++x) out += ' ' + alg.name(alg.neg(x));
  out += '\n';
  auto table = [&](const char* key, auto op) {
    for (Elem x = 0; x < n; ++x) {
      if (x == 0) out += std::string(key) + ' ';
      for (Elem y = 0; y < n; ++y) {
        if (y != 0) out += ' ';
        out += alg.name(op(x, y));
      }
      out += '\n';
    }
  };
  table("join", [&](Elem x, Elem y) { return alg.join(x, y); });
  table("fusion", [&](Elem x, Elem y) { return alg.fusion(x, y); });
  return out;
}

std::string dot_export(const FiniteInRL& alg, OrderKind order) {
  const OrderPair o = compute_orders(alg);
  const BitMatrix& covers = order == OrderKind::lattice ? o.lattice_covers : o.monoidal_covers;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + '"';
  };
  std::string out = order == OrderKind::lattice ? "digraph lattice {\n" : "digraph monoidal {\n";
  out += "  rankdir=BT;\n";
  for (Elem x = 0; x < alg.size(); ++x)
    out += "  n" + std::to_string(x) + " [label=" + quote(alg.name(x)) + "];\n";
  for (Elem x = 0; x < alg.size(); ++x)
    for (Elem y = 0; y < alg.size(); ++y)
      if (covers.test(x, y)) out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
  out += "}\n";
  return out;
}

bool looks_like_gluing_spec(std::string_view text) {
  const auto lines = tokenize(text);
  return !lines.empty() && lines.front().front().text == "lower";
}

GluingSpecFile parse_gluing_spec(std::string_view text) {
  GluingSpecFile spec;
  std::map<std::string, bool> seen;
  bool in_phi = false;
  for (const auto& line : tokenize(text)) {
    const Token& head = line.front();
    // Keys take at most one value, so a pair is never mistaken for one.
    const bool pair = line.size() == 3 && line[1].text == "->";
    if (pair) {
      if (!in_phi) throw ParseError(head.line, head.column, "pair before 'phi'");
      spec.gluing.phi.emplace_back(line[0].text, line[2].text);
      continue;
    }
    if (in_phi && line.size() != 2 && head.text != "phi")
      throw ParseError(head.line, head.column, "expected 'x -> y'");
    if (seen[head.text])
      throw ParseError(head.line, head.column, "duplicate entry '" + head.text + "'");
    seen[head.text] = true;
    if (head.text == "phi") {
      if (line.size() != 1) throw ParseError(line[1].line, line[1].column, "'phi' stands alone");
      in_phi = true;
      continue;
    }
    if (line.size() != 2)
      throw ParseError(head.line, head.column, "'" + head.text + "' takes one value");
    const std::string& value = line[1].text;
    if (head.text == "lower")
      spec.lower = value;
    else if (head.text == "upper")
      spec.upper = value;
    else if (head.text == "a")
      spec.gluing.a = value;
    else if (head.text == "b")
      spec.gluing.b = value;
    else
      throw ParseError(head.line, head.column, "unknown entry '" + head.text + "'");
  }
  for (const char* key : {"lower", "upper", "a", "b", "phi"})
    if (!seen[key]) throw ParseError(line_count(text), 1, std::string("missing '") + key + "'");
  return spec;
}

std::string emit_gluing_spec(const GluingSpecFile& spec) {
  std::string out = "lower " + spec.lower + "\nupper " + spec.upper + "\na " + spec.gluing.a +
                    "\nb " + spec.gluing.b + "\nphi\n";
  for (const auto& [x, y] : spec.gluing.phi) out += x + " -> " + y + '\n';
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

namespace {

FiniteInRL load_with_depth(const std::filesystem::path& path, int depth);

GluingSpec load_spec_with_depth(const std::filesystem::path& path, int depth) {
  if (depth > 256) throw Error("spec files nest too deeply at '" + path.string() + "'");
  const GluingSpecFile f = parse_gluing_spec(read_text(path));
  const auto base = path.parent_path();
  return resolve(load_with_depth(base / f.lower, depth + 1), load_with_depth(base / f.upper, depth + 1),
                 f.gluing);
}

FiniteInRL load_with_depth(const std::filesystem::path& path, int depth) {
  const std::string text = read_text(path);
  if (looks_like_gluing_spec(text)) return glue(load_spec_with_depth(path, depth)).result;
  return parse_algebra(text);
}

struct TreeWriter {
  std::filesystem::path dir;
  std::size_t nodes = 0;
  std::size_t leaves = 0;

  std::string write(const DecompositionTree& t, bool root) {
    if (t->is_leaf()) {
      const std::string name = root ? "root.rlat" : "leaf_" + std::to_string(leaves++) + ".rlat";
      write_text(dir / name, emit_algebra(t->algebra));
      return name;
    }
    const std::string name = root ? "root.glue" : "node_" + std::to_string(nodes++) + ".glue";
    GluingSpecFile f;
    f.lower = write(t->lower, false);
    f.upper = write(t->upper, false);
    f.gluing = *t->gluing;
    write_text(dir / name, emit_gluing_spec(f));
    return name;
  }
};

DecompositionTree read_node(const std::filesystem::path& path, int depth) {
  if (depth > 256) throw Error("tree nests too deeply at '" + path.string() + "'");
  const std::string text = read_text(path);
  if (!looks_like_gluing_spec(text)) return make_leaf(parse_algebra(text));
  const GluingSpecFile f = parse_gluing_spec(text);
  const auto base = path.parent_path();
  auto lower = read_node(base / f.lower, depth + 1);
  auto upper = read_node(base / f.upper, depth + 1);
  FiniteInRL glued = glue(resolve(lower->algebra, upper->algebra, f.gluing)).result;
  return make_node(std::move(glued), f.gluing, std::move(lower), std::move(upper));
}

}  // namespace

FiniteInRL load_algebra(const std::filesystem::path& path) { return load_with_depth(path, 0); }

GluingSpec load_gluing_spec(const std::filesystem::path& path) { return load_spec_with_depth(path, 0); }

void write_tree(const DecompositionTree& tree, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  TreeWriter{dir}.write(tree, true);
}

DecompositionTree read_tree(const std::filesystem::path& dir) {
  if (std::filesystem::exists(dir / "root.glue")) return read_node(dir / "root.glue", 0);
  if (std::filesystem::exists(dir / "root.rlat")) return read_node(dir / "root.rlat", 0);
  throw Error("no root.glue or root.rlat in '" + dir.string() + "'");
}

}  // namespace inrl

#include <detdecomp/io.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace detdecomp {

namespace {

std::string render_entry(int index, const Scalar& c) {
  if (c.is_one()) return "+e" + std::to_string(index);
  if (c.is_minus_one()) return "-e" + std::to_string(index);
  return c.to_string() + "*e" + std::to_string(index);
}

std::string render_factor(const LinearVector& f) {
  std::string out;
  for (const auto& [i, c] : f.coeffs()) {
    if (!out.empty()) out += ' ';
    out += render_entry(i, c);
  }
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_positive_int(const std::string& text, const char* what, int line) {
  if (text.empty()) throw ParseError(std::string(what) + ": empty", line);
  long v = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(std::string(what) + ": bad number '" + text + "'", line);
    }
    v = v * 10 + (ch - '0');
    if (v > 1000000) throw ParseError(std::string(what) + ": out of range", line);
  }
  return static_cast<int>(v);
}

std::string expect_keyed(const std::string& token, const std::string& key, int line) {
  if (token.rfind(key + "=", 0) != 0) {
    throw ParseError("expected '" + key + "=...', got '" + token + "'", line);
  }
  return token.substr(key.size() + 1);
}

// "+e3", "-e5", "2*e2", "-1/2*e4" -> (index, coefficient)
std::pair<int, Scalar> parse_entry(const std::string& entry, const FieldSpec& field,
                                   int n, int line) {
  std::string body = entry;
  bool negate = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negate = body[0] == '-';
    body = body.substr(1);
  }
  if (body.empty()) throw ParseError("empty covector entry", line);

  Scalar coeff = Scalar::one(field);
  std::size_t epos = 0;
  if (body[0] != 'e') {
    const std::size_t star = body.find('*');
    if (star == std::string::npos) {
      throw ParseError("covector entry '" + entry + "' lacks 'e<index>'", line);
    }
    try {
      coeff = Scalar::parse(body.substr(0, star), field);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in entry '" + entry + "'", line);
    }
    epos = star + 1;
    if (epos >= body.size() || body[epos] != 'e') {
      throw ParseError("covector entry '" + entry + "' lacks 'e<index>'", line);
    }
  }
  const int index = parse_positive_int(body.substr(epos + 1), "basis index", line);
  if (index < 1 || index > n) {
    throw ParseError("basis index " + std::to_string(index) + " outside [1, " +
                     std::to_string(n) + "]", line);
  }
  if (negate) coeff = -coeff;
  if (coeff.is_zero()) throw ParseError("zero coefficient in entry '" + entry + "'", line);
  return {index, coeff};
}

std::vector<std::string> split_on_pipe(const std::string& line) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : line) {
    if (ch == '|') {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(trim(current));
  return parts;
}

}  // namespace

std::string write_decomposition(const Decomposition& d) {
  std::string out = "detdecomp 1 n=" + std::to_string(d.order()) +
                    " field=" + d.field().to_string() +
                    " terms=" + std::to_string(d.term_count()) +
                    " provenance=" + provenance_tag(d.provenance()) + "\n";
  for (const DecomposableTerm& t : d.terms()) {
    out += t.coeff.to_string();
    for (const LinearVector& f : t.factors) {
      out += " | ";
      out += render_factor(f);
    }
    out += '\n';
  }
  return out;
}

Decomposition read_decomposition(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1);

  const std::vector<std::string> head = split_ws(lines[0]);
  if (head.size() != 6 || head[0] != "detdecomp") {
    throw ParseError("bad header: expected "
                     "'detdecomp 1 n=<n> field=<f> terms=<t> provenance=<tag>'", 1);
  }
  if (head[1] != "1") throw ParseError("unsupported format version '" + head[1] + "'", 1);
  const int n = parse_positive_int(expect_keyed(head[2], "n", 1), "n", 1);
  if (n < 1) throw ParseError("n must be >= 1", 1);
  FieldSpec field;
  try {
    field = FieldSpec::parse(expect_keyed(head[3], "field", 1));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), 1);
  }
  field_validate(field);
  const int declared = parse_positive_int(expect_keyed(head[4], "terms", 1), "terms", 1);
  provenance_from_tag(expect_keyed(head[5], "provenance", 1));  // tag must be known

  std::vector<DecomposableTerm> terms;
  terms.reserve(static_cast<std::size_t>(declared));
  std::size_t consumed = 1;
  for (; consumed < lines.size(); ++consumed) {
    const int line_no = static_cast<int>(consumed) + 1;
    const std::string& line = lines[consumed];
    if (trim(line).empty()) break;  // blank line ends the body
    if (static_cast<int>(terms.size()) == declared) {
      throw CountMismatch("more terms than the declared " +
                          std::to_string(declared), line_no);
    }
    const std::vector<std::string> parts = split_on_pipe(line);
    if (static_cast<int>(parts.size()) != n + 1) {
      throw ParseError("term has " + std::to_string(parts.size() - 1) +
                       " factors, expected " + std::to_string(n), line_no);
    }
    DecomposableTerm t;
    try {
      t.coeff = Scalar::parse(parts[0], field);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (t.coeff.is_zero()) throw ParseError("term coefficient is zero", line_no);
    t.factors.reserve(static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s) {
      const std::vector<std::string> entries = split_ws(parts[static_cast<std::size_t>(s)]);
      if (entries.empty()) throw ParseError("empty factor", line_no);
      LinearVector f;
      for (const std::string& entry : entries) {
        const auto [index, coeff] = parse_entry(entry, field, n, line_no);
        f.add(index, coeff);
      }
      if (f.coeffs().empty()) throw ParseError("factor cancels to zero", line_no);
      t.factors.push_back(std::move(f));
    }
    terms.push_back(std::move(t));
  }
  for (; consumed < lines.size(); ++consumed) {
    if (!trim(lines[consumed]).empty()) {
      throw CountMismatch("content after the declared " + std::to_string(declared) +
                          " terms", static_cast<int>(consumed) + 1);
    }
  }
  if (static_cast<int>(terms.size()) != declared) {
    throw CountMismatch("header declares " + std::to_string(declared) +
                        " terms but the body has " + std::to_string(terms.size()),
                        static_cast<int>(lines.size()));
  }
  return Decomposition(n, field, Provenance::file, std::move(terms));
}

void write_decomposition_file(const Decomposition& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  const std::string text = write_decomposition(d);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write to '" + path + "' failed");
}

Decomposition read_decomposition_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_decomposition(buf.str());
}

Matrix read_matrix(const std::string& text, const FieldSpec& field) {
  const std::vector<std::string> lines = split_lines(text);
  std::size_t row_line = 0;
  while (row_line < lines.size() && trim(lines[row_line]).empty()) ++row_line;
  if (row_line == lines.size()) throw ParseError("empty matrix input", 1);
  const int n = parse_positive_int(trim(lines[row_line]), "matrix order",
                                   static_cast<int>(row_line) + 1);
  if (n < 1) throw ParseError("matrix order must be >= 1",
                              static_cast<int>(row_line) + 1);
  ++row_line;

  std::vector<Scalar> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  int rows = 0;
  for (; row_line < lines.size() && rows < n; ++row_line) {
    const int line_no = static_cast<int>(row_line) + 1;
    if (trim(lines[row_line]).empty()) continue;
    const std::vector<std::string> toks = split_ws(lines[row_line]);
    if (static_cast<int>(toks.size()) != n) {
      throw ParseError("row has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(n), line_no);
    }
    for (const std::string& tok : toks) {
      try {
        entries.push_back(Scalar::parse(tok, field));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    ++rows;
  }
  if (rows != n) {
    throw ParseError("matrix has " + std::to_string(rows) + " rows, expected " +
                     std::to_string(n), static_cast<int>(lines.size()));
  }
  for (; row_line < lines.size(); ++row_line) {
    if (!trim(lines[row_line]).empty()) {
      throw ParseError("content after the matrix rows",
                       static_cast<int>(row_line) + 1);
    }
  }
  return Matrix(n, field, std::move(entries));
}

Matrix read_matrix_file(const std::string& path, const FieldSpec& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_matrix(buf.str(), field);
}

std::string write_matrix(const Matrix& a) {
  std::string out = std::to_string(a.order()) + "\n";
  for (int r = 1; r <= a.order(); ++r) {
    for (int c = 1; c <= a.order(); ++c) {
      if (c > 1) out += ' ';
      out += a.at(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string render_form(const LinearForm& f) {
  std::string out;
  for (const auto& [v, c] : f.coeffs()) {
    if (!out.empty()) out += ' ';
    const std::string var = "x[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
    if (c.is_one()) {
      out += "+" + var;
    } else if (c.is_minus_one()) {
      out += "-" + var;
    } else {
      out += c.to_string() + "*" + var;
    }
  }
  return out;
}

}  // namespace

std::string write_chow(const ChowDecomposition& c) {
  std::string out;
  for (const ChowTerm& t : c.terms()) {
    out += t.coeff.to_string();
    for (const LinearForm& f : t.forms) {
      out += " * (" + render_form(f) + ")";
    }
    out += '\n';
  }
  return out;
}

std::string write_waring(const WaringDecomposition& w) {
  std::string out;
  for (const WaringSummand& s : w.summands()) {
    out += s.coeff.to_string() + " * (" + render_form(s.form) + ")^" +
           std::to_string(s.power) + "\n";
  }
  return out;
}

}  // namespace detdecomp

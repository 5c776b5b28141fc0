#include "finvar/groupfile.hpp"

#include <fstream>
#include <sstream>

namespace finvar {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw GroupFileError(line, "expected an integer, got '" + s + "'");
  }
}

std::string keyword_value(const std::string& text, const std::string& key, int line) {
  if (text.rfind(key + " ", 0) != 0) throw GroupFileError(line, "expected '" + key + " <value>'");
  return trim(text.substr(key.size() + 1));
}

}  // namespace

GroupFile parse_group_file(std::istream& in) {
  GroupFile g;
  std::string raw;
  int line_no = 0;
  int stage = 0;  // 0 magic, 1 conductor, 2 dim, 3 body
  int row = -1;
  Mat cur;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string text = raw;
    std::size_t hash = text.find('#');
    if (hash != std::string::npos) {
      if (stage > 0) g.comments.push_back(trim(text.substr(hash + 1)));
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    if (stage == 0) {
      if (keyword_value(text, "finvar-group", line_no) != "1") throw GroupFileError(line_no, "unsupported format version");
      stage = 1;
    } else if (stage == 1) {
      g.conductor = parse_int(keyword_value(text, "conductor", line_no), line_no);
      if (g.conductor < 1) throw GroupFileError(line_no, "conductor must be positive");
      stage = 2;
    } else if (stage == 2) {
      g.dim = parse_int(keyword_value(text, "dim", line_no), line_no);
      if (g.dim < 1) throw GroupFileError(line_no, "dim must be positive");
      stage = 3;
    } else if (row < 0) {
      if (text != "matrix") throw GroupFileError(line_no, "expected 'matrix'");
      cur = Mat(g.dim, g.conductor);
      row = 0;
    } else {
      std::vector<std::string> cells;
      std::stringstream ss(text);
      std::string cell;
      while (std::getline(ss, cell, ';')) cells.push_back(trim(cell));
      if (static_cast<int>(cells.size()) != g.dim) {
        throw GroupFileError(line_no, "expected " + std::to_string(g.dim) + " entries, got " + std::to_string(cells.size()));
      }
      for (int j = 0; j < g.dim; ++j) {
        CycNum v;
        try {
          v = CycNum::parse(cells[j]);
          v = v.embed(g.conductor);
        } catch (const std::exception& e) {
          throw GroupFileError(line_no, "entry " + std::to_string(j + 1) + ": " + e.what());
        }
        cur.set(row, j, v);
      }
      if (++row == g.dim) {
        if (cur.det().is_zero()) throw GroupFileError(line_no, "matrix is singular");
        g.generators.push_back(cur);
        row = -1;
      }
    }
  }
  if (stage < 3) throw GroupFileError(line_no, "incomplete header");
  if (row >= 0) throw GroupFileError(line_no, "truncated matrix");
  if (g.generators.empty()) throw GroupFileError(line_no, "no matrices");
  return g;
}

GroupFile parse_group_text(const std::string& text) {
  std::istringstream in(text);
  return parse_group_file(in);
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupFileError(0, "cannot open " + path);
  return parse_group_file(in);
}

std::string format_group_file(const GroupFile& g) {
  std::ostringstream os;
  os << "finvar-group 1\n";
  for (const auto& c : g.comments) os << "# " << c << '\n';
  os << "conductor " << g.conductor << "\ndim " << g.dim << '\n';
  for (const auto& m : g.generators) {
    Mat e = m.embed(g.conductor);
    os << "matrix\n";
    for (int i = 0; i < g.dim; ++i) {
      for (int j = 0; j < g.dim; ++j) os << (j ? "; " : "") << e.at(i, j).str();
      os << '\n';
    }
  }
  return os.str();
}

void write_group_file(const std::string& path, const GroupFile& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_group_file(g);
}

}  // namespace finvar

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "finvar/mat.hpp"

namespace finvar {

// Text format, version 1:
//   finvar-group 1
//   conductor <n>
//   dim <d>
//   matrix
//   <d rows, entries separated by ';'>
//   ...
// Entries are CycNum text forms; '#' starts a comment.
struct GroupFileError : std::runtime_error {
  int line;
  GroupFileError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct GroupFile {
  int conductor = 1;
  int dim = 0;
  std::vector<Mat> generators;
  std::vector<std::string> comments;  // written after the header
};

GroupFile parse_group_file(std::istream& in);
GroupFile parse_group_text(const std::string& text);
GroupFile read_group_file(const std::string& path);
std::string format_group_file(const GroupFile& g);
void write_group_file(const std::string& path, const GroupFile& g);

}  // namespace finvar

#include <gtest/gtest.h>

#include "finvar/catalog.hpp"
#include "finvar/groupfile.hpp"

using namespace finvar;

namespace {

std::string data_path(const std::string& name) { return std::string(FINVAR_TEST_DATA) + "/" + name; }

int error_line(const std::string& text) {
  try {
    parse_group_text(text);
  } catch (const GroupFileError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST(GroupFile, ReadsQ8) {
  GroupFile g = read_group_file(data_path("q8.group"));
  EXPECT_EQ(g.conductor, 4);
  EXPECT_EQ(g.dim, 2);
  ASSERT_EQ(g.generators.size(), 2u);
  EXPECT_EQ(MatGroup::closure(g.generators).order(), 8u);
  ASSERT_FALSE(g.comments.empty());
}

TEST(GroupFile, RoundTrip) {
  CatalogEntry o = binary_polyhedral(Polyhedral::Octahedral);
  GroupFile f = to_group_file(o);
  GroupFile back = parse_group_text(format_group_file(f));
  EXPECT_EQ(back.conductor, f.conductor);
  EXPECT_EQ(back.dim, f.dim);
  ASSERT_EQ(back.generators.size(), f.generators.size());
  for (std::size_t i = 0; i < f.generators.size(); ++i) EXPECT_EQ(back.generators[i], f.generators[i]);
  EXPECT_EQ(format_group_file(back), format_group_file(f));
}

TEST(GroupFile, ErrorsCarryLineNumbers) {
  try {
    read_group_file(data_path("bad_entry.group"));
    FAIL() << "expected a parse error";
  } catch (const GroupFileError& e) {
    EXPECT_EQ(e.line, 6);
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos);
  }
  EXPECT_EQ(error_line("nonsense\n"), 1);
  EXPECT_EQ(error_line("finvar-group 1\nconductor 1\ndim 2\nmatrix\n1; 0\n"), 5);       // truncated at the last row read
  EXPECT_EQ(error_line("finvar-group 1\nconductor 1\ndim 2\nmatrix\n1; 0\n0\n"), 6);     // short row
  EXPECT_EQ(error_line("finvar-group 1\nconductor 1\ndim 1\nmatrix\n0\n"), 5);           // singular, reported at its last row
  EXPECT_EQ(error_line("finvar-group 1\nconductor 1\nmatrix\n1\n"), 3);                  // header incomplete
}

TEST(GroupFile, EmbeddedDataParses) {
  for (const char* name : {"st32.group", "a5_pm_e_3dim.group", "klein_pm_e_3dim.group"}) {
    GroupFile g = parse_group_text(embedded_group_text(name));
    EXPECT_GT(g.generators.size(), 0u) << name;
  }
}

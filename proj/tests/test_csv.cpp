#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "cellshape/csv.hpp"

namespace cellshape::csv {
namespace {

TEST(Csv, NumberFormatting) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(9801.0), "9801");
  EXPECT_EQ(format_number(0.785398163), "0.785398");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(2.44140625e-4), "0.000244141");
  EXPECT_EQ(format_number(1234567.0), "1.23457e+06");
}

TEST(Csv, EscapeAndSplit) {
  EXPECT_EQ(escape("plain"), "plain");
  EXPECT_EQ(escape("a,b"), "\"a,b\"");
  EXPECT_EQ(escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(split_record(" 1 , 2.5,\"x,y\",  "), (std::vector<std::string>{"1", "2.5", "x,y", ""}));
  EXPECT_EQ(split_record("\"a\"\"b\""), (std::vector<std::string>{"a\"b"}));
  EXPECT_EQ(split_lines("h\r\n1\n\n2\n"), (std::vector<std::string>{"h", "1", "2"}));
}

}  // namespace
}  // namespace cellshape::csv

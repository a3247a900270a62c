#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ybe/bracoid.hpp"
#include "ybe/brace.hpp"
#include "ybe/group.hpp"
#include "ybe/semibrace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Unvalidated file contents; entries are range-checked by the parser.
struct RawGroup {
  std::size_t order = 0;
  std::string name;
  Table table;
};

struct RawAction {
  std::size_t actor_order = 0;
  std::size_t points = 0;
  Table table;
};

struct RawBrace {
  std::size_t order = 0;
  Table star;
  Table dot;
};

struct RawBracoid {
  std::size_t g_order = 0;
  std::size_t n_order = 0;
  Table g;
  Table n;
  Table act;
};

struct RawSemibrace {
  std::size_t order = 0;
  Table dot;
  Table plus;
};

// All parsers throw ParseError("line <k>: ...").
RawGroup parse_group(std::string_view text);
RawAction parse_action(std::string_view text);
RawBrace parse_brace(std::string_view text);
RawBracoid parse_bracoid(std::string_view text);
RawSemibrace parse_semibrace(std::string_view text);
SolutionMap parse_solution(std::string_view text);

std::string format_group(FiniteGroup const& g);
std::string format_action(GroupAction const& a);
std::string format_brace(SkewBrace const& b);
std::string format_bracoid(SkewBracoid const& b);
std::string format_semibrace(Semibrace const& sb);
std::string format_solution(SolutionMap const& r);

std::string read_file(std::filesystem::path const& path);
void write_file(std::filesystem::path const& path, std::string_view text);

}  // namespace ybe

#pragma once

// Line-oriented game file format:
//
//   rps m=<players> objects=<label,label,...>
//   # construction: <tag>
//   counts=<c0,c1,...> winner=<label|TIE>
//
// Monosets omitted from the file are ties.

#include "rpsforge/game.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace rps {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serializes the winner table for every multiset of size `players`, or of
/// every size 1..players when `all_sizes` is set.
std::string format_game(const GameRule& rule, bool all_sizes = false);
void write_game(std::ostream& os, const GameRule& rule, bool all_sizes = false);

GameRule parse_game(std::istream& is);
GameRule parse_game(const std::string& text);

void save_game(const GameRule& rule, const std::filesystem::path& path, bool all_sizes = false);
GameRule load_game(const std::filesystem::path& path);

}  // namespace rps

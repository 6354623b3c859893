#include "rpsforge/game_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace rps {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

unsigned parse_unsigned(std::string_view text, std::size_t line, const char* what) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

/// Splits "key=value key=value" into pairs, in order.
std::vector<std::pair<std::string, std::string>> fields(std::string_view text, std::size_t line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(line, "expected key=value, got '" + token + "'");
    out.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line), detail_(message) {}

void write_game(std::ostream& os, const GameRule& rule, bool all_sizes) {
  os << "rps m=" << rule.players() << " objects=";
  for (std::size_t i = 0; i < rule.object_count(); ++i) os << (i ? "," : "") << rule.labels()[i];
  os << '\n';
  if (!rule.metadata().construction.empty()) os << "# construction: " << rule.metadata().construction << '\n';
  const unsigned first = all_sizes ? 1 : rule.players();
  for (unsigned size = first; size <= rule.players(); ++size) {
    // Enumeration order, not std::map key order: largest first count first.
    for_each_multiset(rule.object_count(), size, [&](const std::vector<unsigned>& counts) {
      const Outcome o = eval_outcome(rule, ChoiceMultiset(counts));
      os << "counts=";
      for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
      os << " winner=" << (o.is_tie() ? std::string("TIE") : rule.label(*o.winner)) << '\n';
    });
  }
}

std::string format_game(const GameRule& rule, bool all_sizes) {
  std::ostringstream os;
  write_game(os, rule, all_sizes);
  return os.str();
}

GameRule parse_game(std::istream& is) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<unsigned> players;
  std::vector<std::string> labels;
  RuleMetadata metadata;
  WinnerTable table;

  while (std::getline(is, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view tag = "# construction:";
      if (line.starts_with(tag)) metadata.construction = std::string(trim(line.substr(tag.size())));
      continue;
    }
    if (!players) {
      if (!line.starts_with("rps ")) throw ParseError(line_no, "expected header 'rps m=<int> objects=<labels>'");
      for (const auto& [key, value] : fields(line.substr(4), line_no)) {
        if (key == "m") {
          players = parse_unsigned(value, line_no, "player count");
        } else if (key == "objects") {
          labels = split(value, ',');
        } else {
          throw ParseError(line_no, "unknown header field '" + key + "'");
        }
      }
      if (!players || *players < 1) throw ParseError(line_no, "header is missing a positive m");
      if (labels.empty() || (labels.size() == 1 && labels[0].empty())) {
        throw ParseError(line_no, "header is missing objects");
      }
      continue;
    }

    std::optional<std::vector<unsigned>> counts;
    std::optional<std::string> winner;
    for (const auto& [key, value] : fields(line, line_no)) {
      if (key == "counts") {
        std::vector<unsigned> c;
        for (const auto& part : split(value, ',')) c.push_back(parse_unsigned(part, line_no, "count"));
        counts = std::move(c);
      } else if (key == "winner") {
        winner = value;
      } else {
        throw ParseError(line_no, "unknown field '" + key + "'");
      }
    }
    if (!counts || !winner) throw ParseError(line_no, "entry needs counts= and winner=");
    if (counts->size() != labels.size()) {
      throw ParseError(line_no, "counts has " + std::to_string(counts->size()) + " entries, expected " +
                                    std::to_string(labels.size()));
    }
    std::optional<ObjectId> id;
    if (*winner != "TIE") {
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == *winner) id = ObjectId{i};
      }
      if (!id) throw ParseError(line_no, "unknown winner label '" + *winner + "'");
    }
    if (!table.emplace(*counts, id).second) throw ParseError(line_no, "duplicate multiset entry");
  }
  if (!players) throw ParseError(line_no, "missing header");

  std::optional<std::vector<unsigned>> missing;
  for_each_multiset(labels.size(), *players, [&](const std::vector<unsigned>& c) {
    const bool monoset = std::count_if(c.begin(), c.end(), [](unsigned x) { return x > 0; }) == 1;
    if (!missing && !monoset && !table.contains(c)) missing = c;
  });
  if (missing) {
    std::string text;
    for (std::size_t i = 0; i < missing->size(); ++i) text += (i ? "," : "") + std::to_string((*missing)[i]);
    throw ParseError(line_no, "no entry for counts=" + text);
  }

  try {
    return GameRule::from_table(*players, std::move(labels), std::move(table), std::move(metadata));
  } catch (const DomainError& e) {
    throw ParseError(line_no, e.what());
  }
}

GameRule parse_game(const std::string& text) {
  std::istringstream is(text);
  return parse_game(is);
}

void save_game(const GameRule& rule, const std::filesystem::path& path, bool all_sizes) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  write_game(os, rule, all_sizes);
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

GameRule load_game(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return parse_game(is);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

}  // namespace rps

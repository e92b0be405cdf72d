#include "editvote/ballot_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

namespace editvote {

namespace {

struct Line {
  int number;
  std::string text;
};

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char ch) { return std::isspace(ch); });
}

std::string trimmed(const std::string& s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
    --end;
  return s.substr(begin, end - begin);
}

// Parses `# KEY: value` metadata headers; returns true and fills value when
// the key matches.
bool header_value(const std::string& line, const std::string& key,
                  long long& value) {
  const std::string prefix = "# " + key + ":";
  if (line.rfind(prefix, 0) != 0) return false;
  std::istringstream in(line.substr(prefix.size()));
  return static_cast<bool>(in >> value);
}

std::vector<CandidateId> parse_int_row(const Line& line,
                                       const std::string& source) {
  std::istringstream in(line.text);
  std::vector<CandidateId> row;
  CandidateId value;
  while (in >> value) row.push_back(value);
  if (!in.eof()) {
    throw ParseError(source, line.number, "expected integers, got '" +
                                              trimmed(line.text) + "'");
  }
  return row;
}

Profile finish_profile(const std::vector<std::vector<CandidateId>>& rows,
                       const std::vector<int>& row_lines, int m,
                       const std::string& source) {
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const int line = row_lines[i];
    if (static_cast<int>(row.size()) != m) {
      throw ParseError(source, line,
                       "expected " + std::to_string(m) + " candidates, got " +
                           std::to_string(row.size()));
    }
    std::vector<char> seen(m + 1, 0);
    for (const CandidateId c : row) {
      if (c < 1 || c > m) {
        throw ParseError(source, line, "candidate " + std::to_string(c) +
                                           " out of range 1.." +
                                           std::to_string(m));
      }
      if (seen[c]) {
        throw ParseError(source, line,
                         "duplicate candidate " + std::to_string(c));
      }
      seen[c] = 1;
    }
  }
  return build_profile(rows, m);
}

Profile parse_native(const std::vector<Line>& lines,
                     const std::string& source) {
  if (lines.empty()) throw ParseError(source, 1, "no ballot data");
  std::istringstream head(lines[0].text);
  int m = 0;
  int n = 0;
  std::string extra;
  if (!(head >> m >> n) || (head >> extra)) {
    throw ParseError(source, lines[0].number,
                     "expected header 'm n', got '" + trimmed(lines[0].text) +
                         "'");
  }
  if (m < 1 || n < 1) {
    throw ParseError(source, lines[0].number,
                     "candidate and voter counts must be positive");
  }
  if (static_cast<int>(lines.size()) - 1 != n) {
    throw ParseError(source, lines.back().number,
                     "expected " + std::to_string(n) + " ballot rows, got " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<CandidateId>> rows;
  std::vector<int> row_lines;
  for (size_t i = 1; i < lines.size(); ++i) {
    rows.push_back(parse_int_row(lines[i], source));
    row_lines.push_back(lines[i].number);
  }
  return finish_profile(rows, row_lines, m, source);
}

Profile parse_soc(const std::vector<Line>& lines, long long declared_m,
                  long long declared_n, const std::string& source) {
  std::vector<std::vector<CandidateId>> rows;
  std::vector<int> row_lines;
  for (const Line& line : lines) {
    const size_t colon = line.text.find(':');
    if (colon == std::string::npos) {
      throw ParseError(source, line.number,
                       "expected 'count: c1,c2,...', got '" +
                           trimmed(line.text) + "'");
    }
    long long count = 0;
    {
      std::istringstream in(line.text.substr(0, colon));
      std::string extra;
      if (!(in >> count) || (in >> extra) || count < 1) {
        throw ParseError(source, line.number,
                         "invalid multiplicity '" +
                             trimmed(line.text.substr(0, colon)) + "'");
      }
    }
    std::vector<CandidateId> row;
    std::string item;
    std::istringstream in(line.text.substr(colon + 1));
    while (std::getline(in, item, ',')) {
      std::istringstream field(trimmed(item));
      CandidateId c = 0;
      std::string extra;
      if (!(field >> c) || (field >> extra)) {
        throw ParseError(source, line.number,
                         "invalid candidate '" + trimmed(item) + "'");
      }
      row.push_back(c);
    }
    if (row.empty()) {
      throw ParseError(source, line.number, "empty ranking");
    }
    for (long long k = 0; k < count; ++k) {
      rows.push_back(row);
      row_lines.push_back(line.number);
    }
  }
  if (rows.empty()) throw ParseError(source, 1, "no ballot data");
  const int m = declared_m > 0 ? static_cast<int>(declared_m)
                               : static_cast<int>(rows[0].size());
  if (declared_n > 0 && declared_n != static_cast<long long>(rows.size())) {
    throw ParseError(source, lines.back().number,
                     "header declares " + std::to_string(declared_n) +
                         " voters but file expands to " +
                         std::to_string(rows.size()));
  }
  return finish_profile(rows, row_lines, m, source);
}

}  // namespace

Profile parse_profile_stream(std::istream& in, BallotFormat format,
                             const std::string& source_name) {
  std::vector<Line> data_lines;
  long long declared_m = 0;
  long long declared_n = 0;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (is_blank(raw)) continue;
    if (raw[0] == '#') {
      header_value(raw, "NUMBER ALTERNATIVES", declared_m);
      header_value(raw, "NUMBER VOTERS", declared_n);
      continue;
    }
    data_lines.push_back({line_no, raw});
  }
  if (format == BallotFormat::autodetect) {
    const bool looks_soc =
        !data_lines.empty() &&
        data_lines[0].text.find(':') != std::string::npos;
    format = looks_soc ? BallotFormat::soc : BallotFormat::native;
  }
  return format == BallotFormat::native
             ? parse_native(data_lines, source_name)
             : parse_soc(data_lines, declared_m, declared_n, source_name);
}

Profile parse_profile(const std::string& path, BallotFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ballot file: " + path);
  return parse_profile_stream(in, format, path);
}

std::string to_native_text(const Profile& profile) {
  std::ostringstream out;
  out << profile.num_candidates() << ' ' << profile.num_voters_live() << '\n';
  for (const VoterId v : profile.live_voters()) {
    const auto& order = profile.ranking(v).order();
    for (size_t i = 0; i < order.size(); ++i) {
      if (i > 0) out << ' ';
      out << order[i];
    }
    out << '\n';
  }
  return out.str();
}

void write_native(const Profile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write ballot file: " + path);
  out << to_native_text(profile);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
  // splitmix64 finalizer applied over the chained inputs
  std::uint64_t x = master;
  for (const std::uint64_t v : {a, b, c}) {
    x += 0x9E3779B97F4A7C15ULL + v;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    x = x ^ (x >> 31);
  }
  return x;
}

namespace {

// Unbiased draw from [0, bound) by rejection; mt19937_64 output is
// bit-identical across conforming implementations.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

Profile generate_impartial_culture(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("profile dimensions must be positive");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<CandidateId>> rows(n);
  for (auto& row : rows) {
    row.resize(m);
    std::iota(row.begin(), row.end(), 1);
    for (int i = m - 1; i > 0; --i) {
      const int j = static_cast<int>(bounded_rand(rng, i + 1));
      std::swap(row[i], row[j]);
    }
  }
  return build_profile(rows, m);
}

}  // namespace editvote

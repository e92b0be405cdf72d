#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "editvote/profile.hpp"

namespace editvote {

// Ballot file formats.
//
// native:  first data line `m n`, then n lines of m space-separated candidate
//          indices, most preferred first. Lines starting with `#` and blank
//          lines are ignored.
// soc:     strict-order-complete lines `count: c1,c2,...,cm` after optional
//          `#` metadata headers; each line expands into `count` identical
//          voters in file order. `# NUMBER ALTERNATIVES:` and
//          `# NUMBER VOTERS:` headers are validated when present.
enum class BallotFormat { autodetect, native, soc };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " +
                           message),
        line(line) {}

  int line;
};

Profile parse_profile(const std::string& path,
                      BallotFormat format = BallotFormat::autodetect);
Profile parse_profile_stream(std::istream& in, BallotFormat format,
                             const std::string& source_name);

std::string to_native_text(const Profile& profile);
void write_native(const Profile& profile, const std::string& path);

// Stable 64-bit seed mixer for deriving per-trial seeds.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c);

// n rankings drawn independently and uniformly over all m! orders, via
// mt19937_64 driving a rejection-sampled Fisher-Yates shuffle. The stream is
// fully specified by the seed and identical on every platform.
Profile generate_impartial_culture(int m, int n, std::uint64_t seed);

}  // namespace editvote

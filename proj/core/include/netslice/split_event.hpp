#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace netslice {

using ComponentId = std::uint32_t;
using Tick = std::int64_t;

/// One two-way break: parent of size n + m became children of sizes n <= m.
struct SplitEvent {
  Tick tick = 0;
  ComponentId parent_id = 0;
  std::size_t parent_size = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  ComponentId child_small_id = 0;
  ComponentId child_big_id = 0;

  friend bool operator==(const SplitEvent&, const SplitEvent&) = default;
};

inline constexpr const char* kSplitEventCsvHeader =
    "tick,parent_id,parent_size,n,m,child_small_id,child_big_id";

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// CSV with the header above. Metadata, if any, is written first as
/// '# key=value' comment lines.
void write_split_events_csv(std::ostream& out, const std::vector<SplitEvent>& events,
                            const Metadata& meta = {});
/// Skips '#' comment lines. Throws ParseError on a malformed row or header.
std::vector<SplitEvent> read_split_events_csv(std::istream& in);

}  // namespace netslice

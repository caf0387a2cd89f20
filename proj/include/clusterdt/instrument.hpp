#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Lightweight call counters for the public operations.  The self-check
// driver uses them to prove that a full run exercises every operation at
// least once; they are not a profiling facility.
namespace clusterdt::instrument {

// Increment the counter for an operation.  Unknown names are accepted and
// tracked so a typo shows up as an extra key instead of a silent miss.
void bump(std::string_view op);

// Current count for one operation (0 if never bumped).
std::uint64_t count(std::string_view op);

// Reset all counters to zero.
void reset();

// Sorted (name, count) pairs for every counter touched so far.
std::vector<std::pair<std::string, std::uint64_t>> snapshot();

// Canonical list of every public operation that is expected to be covered
// by a full self-check run.
const std::vector<std::string>& tracked_ops();

} // namespace clusterdt::instrument

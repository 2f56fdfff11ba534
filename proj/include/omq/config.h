#pragma once

#include <atomic>
#include <string>

namespace omq {

// Size bounds; exceeding one raises GuardError.
struct Limits {
  int max_closure = 24;
  int max_td_elements = 16;
  int max_adom = 12;
  long max_distributivity = 1L << 20;
  long max_exhaustive = 1L << 16;
  long max_types = 1L << 16;
  std::string dump_horn;  // empty: no dump
};

Limits& limits();

struct Stats {
  std::atomic<long> horn_vars{0};
  std::atomic<long> assignments{0};
  void reset() {
    horn_vars = 0;
    assignments = 0;
  }
};

Stats& stats();

}  // namespace omq

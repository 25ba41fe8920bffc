#pragma once

// One canonical family member per theorem tag; golden reports are recorded
// for exactly these.

namespace canonical {

struct Instance {
  const char* tag;
  long p;
  long N;
  const char* a;
};

inline constexpr Instance instances[] = {
    {"sy1", 3, 3, "1/9"},  {"sy2", 5, 2, "5/1"},    {"sy3", 2, 3, "2/1"}, {"sy4", 5, 2, "1/1"},
    {"dsy1", 5, 5, "2/625"}, {"dsy2", 2, 2, "1/1"}, {"dsy3", 3, 2, "4/1"},
};

}  // namespace canonical

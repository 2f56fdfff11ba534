#include "omq/config.h"

namespace omq {

Limits& limits() {
  static Limits l;
  return l;
}

Stats& stats() {
  static Stats s;
  return s;
}

}  // namespace omq

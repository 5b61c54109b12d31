#include "fncalc/parallel.hpp"

#include <atomic>

namespace fncalc {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

} // namespace fncalc

#include <atomic>

#include "gtv/error.hpp"
#include "gtv/kernels/bitset_ops.hpp"

namespace gtv::kernels {

namespace {

bool detect_avx2() {
#if defined(__x86_64__) || defined(__i386__)
#if defined(__GNUC__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
#else
  return false;
#endif
}

Backend detected_backend() {
  static const Backend b = detect_avx2() ? Backend::avx2 : Backend::scalar;
  return b;
}

// -1: follow detection; otherwise a forced Backend value.
std::atomic<int> forced{-1};

}  // namespace

bool avx2_supported() { return detected_backend() == Backend::avx2; }

Backend active_backend() {
  const int f = forced.load(std::memory_order_relaxed);
  return f < 0 ? detected_backend() : static_cast<Backend>(f);
}

void force_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported()) throw PreconditionError("AVX2 is not available on this CPU");
  forced.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() { forced.store(-1, std::memory_order_relaxed); }

std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return active_backend() == Backend::avx2 ? and_popcount_avx2(a, b) : and_popcount_scalar(a, b);
}

}  // namespace gtv::kernels

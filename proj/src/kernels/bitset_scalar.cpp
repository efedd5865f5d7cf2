#include <bit>

#include "gtv/error.hpp"
#include "gtv/kernels/bitset_ops.hpp"

namespace gtv::kernels {

std::uint64_t and_popcount_scalar(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) throw PreconditionError("and_popcount: length mismatch");
  std::uint64_t total = 0;
  for (size_t i = 0; i < a.size(); ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

}  // namespace gtv::kernels

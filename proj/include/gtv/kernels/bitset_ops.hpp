#pragma once

#include <cstdint>
#include <span>

// Word-parallel bitset kernels. Each kernel has a portable scalar reference
// and an AVX2 variant; `and_popcount` picks one at runtime.
namespace gtv::kernels {

enum class Backend { scalar, avx2 };

// popcount(a & b) over equal-length word arrays.
std::uint64_t and_popcount_scalar(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
// Requires avx2_supported(); lengths need not be a multiple of four.
std::uint64_t and_popcount_avx2(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

bool avx2_supported();
Backend active_backend();
// Override for tests/benchmarks; forcing avx2 on a CPU without it throws.
void force_backend(Backend b);
void reset_backend();

std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

}  // namespace gtv::kernels

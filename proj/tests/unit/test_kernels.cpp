#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "gtv/error.hpp"
#include "gtv/kernels/bitset_ops.hpp"

using namespace gtv::kernels;

namespace {

std::uint64_t naive(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < 64; ++k) c += ((a[i] >> k) & (b[i] >> k)) & 1u;
  return c;
}

}  // namespace

TEST_CASE("scalar and_popcount matches a bit-by-bit count") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u}) {
    std::vector<std::uint64_t> a(n), b(n);
    for (auto& x : a) x = rng();
    for (auto& x : b) x = rng();
    CHECK(and_popcount_scalar(a, b) == naive(a, b));
  }
  std::vector<std::uint64_t> ones(3, ~0ull);
  CHECK(and_popcount_scalar(ones, ones) == 192);
}

TEST_CASE("avx2 and_popcount agrees with scalar on random lengths") {
  if (!avx2_supported()) {
    CHECK_THROWS_AS(force_backend(Backend::avx2), gtv::PreconditionError);
    return;
  }
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 300);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = static_cast<std::size_t>(len(rng));
    std::vector<std::uint64_t> a(n), b(n);
    for (auto& x : a) x = rng() & rng();
    for (auto& x : b) x = rng() | rng();
    REQUIRE(and_popcount_avx2(a, b) == and_popcount_scalar(a, b));
  }
  std::vector<std::uint64_t> ones(9, ~0ull);
  CHECK(and_popcount_avx2(ones, ones) == 9 * 64);
}

TEST_CASE("backend dispatch can be forced and reset") {
  std::vector<std::uint64_t> a{0xF0F0ull, 0x1ull}, b{0xFFFFull, 0x3ull};
  force_backend(Backend::scalar);
  CHECK(active_backend() == Backend::scalar);
  CHECK(and_popcount(a, b) == 9);
  if (avx2_supported()) {
    force_backend(Backend::avx2);
    CHECK(active_backend() == Backend::avx2);
    CHECK(and_popcount(a, b) == 9);
  }
  reset_backend();
  CHECK(active_backend() == (avx2_supported() ? Backend::avx2 : Backend::scalar));
}

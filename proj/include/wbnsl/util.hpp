#pragma once

#include <charconv>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace wbnsl {

// splitmix64; used to derive independent seed streams from (seed, index)
// pairs so that results do not depend on evaluation order or thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

// Uniform draw from [0, n). mt19937_64 is bit-exact across platforms;
// the standard distributions are not, so we roll our own reduction.
inline int bounded_draw(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// Fisher-Yates with the deterministic draw above.
template <typename T>
void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    int j = bounded_draw(rng, i + 1);
    std::swap(v[i], v[static_cast<std::size_t>(j)]);
  }
}

// Shortest round-trip decimal form, locale independent.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Runs f(0..count-1), each writing only into its own slot of whatever the
// caller set up. Results are reduced by the caller in index order, so the
// outcome is independent of the thread count.
template <typename F>
void parallel_for(int count, int threads, F&& f) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  int workers = std::min(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([w, workers, count, &f] {
      for (int i = w; i < count; i += workers) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace wbnsl

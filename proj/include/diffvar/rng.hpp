#pragma once

#include <cstdint>

namespace diffvar {

// Counter-based normal variates: every draw is a pure function of
// (stream, replicate, index), so replicates are reproducible independently of
// execution order and safe to evaluate from any thread.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t key_chain(std::uint64_t key, std::uint64_t word) {
  return splitmix64(key ^ (word * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
}

// (0, 1), both ends excluded.
inline double unit_open(std::uint64_t bits) {
  return (double(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal quantile function (Wichura's PPND16), |error| ~ 1e-15.
double inverse_normal_cdf(double p);

inline double counter_uniform(std::uint64_t stream, std::uint64_t rep, std::uint64_t i) {
  return unit_open(key_chain(key_chain(stream, rep), i));
}

inline double counter_normal(std::uint64_t stream, std::uint64_t rep, std::uint64_t i) {
  return inverse_normal_cdf(counter_uniform(stream, rep, i));
}

}  // namespace diffvar

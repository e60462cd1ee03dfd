#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>

namespace ptk {

// Arbitrary-precision natural number. Values are kept nonnegative by
// construction everywhere in this library; subtraction is never exposed.
using Nat = boost::multiprecision::cpp_int;

inline std::size_t hash_nat(const Nat& n) { return boost::hash<Nat>{}(n); }

inline std::string nat_str(const Nat& n) { return n.str(); }

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace ptk

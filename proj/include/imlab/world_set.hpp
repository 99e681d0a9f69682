#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace imlab {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds a hard size limit.
class LimitError : public Error {
public:
  using Error::Error;
};

/// Relations and world sets are bitmasks, so worlds are capped at 32.
inline constexpr int kMaxWorlds = 32;

/// A subset of {0, ..., n-1}; the world count lives with the owning structure.
class WorldSet {
public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint32_t bits) : bits_(bits) {}
  WorldSet(std::initializer_list<int> worlds) {
    for (int w : worlds) insert(w);
  }

  static constexpr WorldSet full(int n) {
    return WorldSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr WorldSet singleton(int w) { return WorldSet(std::uint32_t{1} << w); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int w) const { return (bits_ >> w) & 1U; }
  constexpr bool subset_of(WorldSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(WorldSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(int w) { bits_ |= std::uint32_t{1} << w; }
  constexpr void erase(int w) { bits_ &= ~(std::uint32_t{1} << w); }

  /// Complement relative to {0..n-1}.
  constexpr WorldSet complement(int n) const { return WorldSet(~bits_ & full(n).bits_); }

  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  constexpr WorldSet operator-(WorldSet o) const { return WorldSet(bits_ & ~o.bits_); }
  constexpr WorldSet& operator&=(WorldSet o) { bits_ &= o.bits_; return *this; }
  constexpr WorldSet& operator|=(WorldSet o) { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const WorldSet&) const = default;

  /// Least member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

private:
  std::uint32_t bits_ = 0;
};

inline std::string to_string(WorldSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](int w) {
    if (!first) os << ',';
    os << w;
    first = false;
  });
  os << '}';
  return os.str();
}

inline void check_world_count(int n, int limit = kMaxWorlds) {
  if (n < 1 || n > limit) {
    throw LimitError("world count " + std::to_string(n) + " outside [1, " + std::to_string(limit) + "]");
  }
}

}  // namespace imlab

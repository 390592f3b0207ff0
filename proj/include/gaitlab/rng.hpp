#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace gaitlab {

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Independent child seed for stream `stream` of `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

// mt19937_64 with hand-rolled distributions, so sequences are identical
// across standard library implementations.
class Rng
{
 public:
   explicit Rng(std::uint64_t seed);

   std::uint64_t next() { return engine_(); }
   double uniform(); // [0, 1)
   double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
   std::size_t index(std::size_t n); // [0, n)
   double normal();                  // N(0, 1), Box-Muller

   template<typename T> void shuffle(std::span<T> xs)
   {
      for(std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[index(i)]);
   }

 private:
   std::mt19937_64 engine_;
   double spare_    = 0.0;
   bool have_spare_ = false;
};

} // namespace gaitlab

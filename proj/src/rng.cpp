#include "gaitlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace gaitlab {

std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
   std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
   z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
   z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
   return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept
{
   std::uint64_t s = base;
   const auto a    = splitmix64(s);
   s               = a ^ (stream * 0xd1b54a32d192ed03ULL);
   return splitmix64(s);
}

Rng::Rng(std::uint64_t seed)
    : engine_(seed)
{}

double Rng::uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::index(std::size_t n)
{
   if(n <= 1) return 0;
   // rejection sampling removes modulo bias
   const std::uint64_t bound = std::uint64_t(n);
   const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % bound);
   std::uint64_t r;
   do {
      r = engine_();
   } while(r >= limit);
   return std::size_t(r % bound);
}

double Rng::normal()
{
   if(have_spare_) {
      have_spare_ = false;
      return spare_;
   }
   double u1 = uniform();
   while(u1 <= 0.0) u1 = uniform();
   const double u2  = uniform();
   const double rad = std::sqrt(-2.0 * std::log(u1));
   const double ang = 2.0 * std::numbers::pi * u2;
   spare_           = rad * std::sin(ang);
   have_spare_      = true;
   return rad * std::cos(ang);
}

} // namespace gaitlab

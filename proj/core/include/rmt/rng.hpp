#ifndef RMT_RNG_HPP
#define RMT_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace rmt {

// Deterministic stream of variates addressed by (seed, stream_id).  Equal
// addresses replay the exact same sequence; distinct stream_ids are
// decorrelated, so parallel workers draw from disjoint streams without
// coordination.  Normal variates use an explicit Box-Muller transform rather
// than std::normal_distribution to keep the byte-level output independent of
// the standard library implementation.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64() { return gen_(); }

  // uniform on [0, 1)
  double uniform();

  // standard normal
  double normal();

  // complex normal with independent N(0, 1/2) parts, so E|z|² = 1
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rmt

#endif

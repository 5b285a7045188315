#pragma once

#include <cstdint>
#include <random>

#include "eacp/algebra.hpp"

namespace eacp {

/// Reproducible source of algebra elements with integer coordinates drawn
/// uniformly from [-bound, bound]. The mapping from engine output to
/// integers is fixed here so a seed gives the same elements everywhere.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed, std::int64_t bound = 5)
      : engine_(seed), bound_(bound) {}

  std::int64_t next_int();
  Rational next_rational() { return Rational(next_int()); }
  AlgebraElement next(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::int64_t bound_;
};

}  // namespace eacp

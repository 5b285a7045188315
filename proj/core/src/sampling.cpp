#include "eacp/sampling.hpp"

namespace eacp {

std::int64_t ElementSampler::next_int() {
  const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
  return static_cast<std::int64_t>(engine_() % span) - bound_;
}

AlgebraElement ElementSampler::next(std::size_t n) {
  Vector h(n);
  for (auto& x : h) x = next_rational();
  Rational u = next_rational();
  return {std::move(h), std::move(u)};
}

}  // namespace eacp

#include "thp/random.hpp"

#include <algorithm>

#include "thp/errors.hpp"

namespace thp {

std::uint32_t DeterministicRng::next_below(std::uint32_t bound) {
  if (bound == 0) throw DomainError("empty range");
  return next_u31() % bound;
}

Scalar DeterministicRng::next_scalar(const FieldSpec& field) {
  if (field.is_prime()) {
    std::uint64_t p = field.characteristic();
    std::uint64_t r = next_u31();
    if (p <= (1u << 31)) {
      r = next_below(static_cast<std::uint32_t>(p));
    } else {
      r %= p;  // unreachable for supported characteristics
    }
    return Scalar::of_integer(Integer(r), field);
  }
  long long num = static_cast<long long>(next_below(199)) - 99;
  long long den = static_cast<long long>(next_below(9)) + 1;
  return Scalar::of_rational(Integer(num), Integer(den));
}

ParameterArray random_parameter_array(std::size_t d, const FieldSpec& field,
                                      std::uint64_t seed) {
  if (field.is_prime() && field.characteristic() < d + 1) {
    throw DomainError("gf:" + std::to_string(field.characteristic()) +
                      " cannot host " + std::to_string(d + 1) +
                      " distinct eigenvalues");
  }
  DeterministicRng rng(seed);
  auto draw_distinct = [&](std::size_t count) {
    std::vector<Scalar> out;
    while (out.size() < count) {
      Scalar x = rng.next_scalar(field);
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
  };
  ParameterArray p;
  p.field = field;
  p.theta = draw_distinct(d + 1);
  p.theta_star = draw_distinct(d + 1);
  while (p.phi.size() < d) {
    Scalar x = rng.next_scalar(field);
    if (!x.is_zero()) p.phi.push_back(x);
  }
  return p;
}

}  // namespace thp

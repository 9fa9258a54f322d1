#include "waring/core.hpp"

namespace waring {

ExponentSequence::ExponentSequence(std::vector<int> ks) : ks_(std::move(ks)) {
  if (ks_.empty()) throw std::invalid_argument("exponent sequence must be nonempty");
  int prev = 2;
  for (int k : ks_) {
    if (k < 2) throw std::invalid_argument("exponents must all be >= 2");
    if (k < prev) throw std::invalid_argument("exponents must be nondecreasing");
    prev = k;
  }
  theta_ = 0;
  gcd_ = 0;
  for (int k : ks_) {
    theta_ += Rat(1, k);
    gcd_ = std::gcd(gcd_, k);
  }
  theta_.canonicalize();
}

ExponentSequence ExponentSequence::constant(int k, int s) {
  return ExponentSequence(std::vector<int>(static_cast<size_t>(s), k));
}

ExponentSequence expand_progression(const ProgressionSpec& spec) {
  if (spec.k < 2) throw std::invalid_argument("progression base exponent must be >= 2");
  if (spec.r < 0) throw std::invalid_argument("progression difference must be >= 0");
  if (spec.s < 1) throw std::invalid_argument("progression length must be >= 1");
  std::vector<int> ks(static_cast<size_t>(spec.s));
  for (int i = 0; i < spec.s; ++i) ks[static_cast<size_t>(i)] = spec.k + spec.r * i;
  return ExponentSequence(std::move(ks));
}

ProblemInstance::ProblemInstance(ExponentSequence ks, Int target, double eta_param)
    : exponents(std::move(ks)), n(std::move(target)), eta(eta_param) {
  if (n < 1) throw std::invalid_argument("target n must be >= 1");
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in (0, 1]");
}

std::vector<Int> ProblemInstance::box_sizes() const {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(exponents.size()));
  for (int k : exponents) out.push_back(kth_root_floor(n, k));
  return out;
}

}  // namespace waring

// SPDX-License-Identifier: Apache-2.0
#include "mpchom/pir.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mpchom/errors.hpp"

namespace mpchom {

namespace {
constexpr std::uint64_t kMaxModulus = 1'000'000'000'000ULL;   // 10^12
constexpr std::uint64_t kMaxProductSize = 1'000'000'000'000'000ULL;  // 10^15
}  // namespace

void Pir::finish_init() {
  strides_.resize(components_.size());
  std::uint64_t stride = 1;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    strides_[t] = stride;
    if (components_[t].size() != 0 &&
        stride > kMaxProductSize / components_[t].size()) {
      fail(Errc::TooLarge, "product ring size exceeds the supported bound");
    }
    stride *= components_[t].size();
  }
  size_ = stride;
  qs_.resize(components_.size());
  for (std::size_t t = 0; t < components_.size(); ++t) {
    qs_[t] = components_[t].q();
  }
  one_ = 0;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    one_ += strides_[t];  // every component encodes 1 as 1
  }
  std::ostringstream os;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    if (t) os << " x ";
    os << components_[t].describe();
  }
  signature_ = os.str();

  if (size_ <= 256) {
    add_tab_.resize(static_cast<std::size_t>(size_ * size_));
    mul_tab_.resize(static_cast<std::size_t>(size_ * size_));
    neg_tab_.resize(static_cast<std::size_t>(size_));
    for (Elem a = 0; a < size_; ++a) {
      neg_tab_[a] = neg_slow(a);
      for (Elem b = 0; b < size_; ++b) {
        add_tab_[a * size_ + b] = add_slow(a, b);
        mul_tab_[a * size_ + b] = mul_slow(a, b);
      }
    }
  }
}

std::shared_ptr<const Pir> Pir::product(std::vector<ChainRing> components) {
  if (components.empty()) {
    fail(Errc::EmptyProduct, "a product ring needs at least one component");
  }
  std::vector<std::size_t> order(components.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return components[a].q() < components[b].q();
                   });

  auto ring = std::shared_ptr<Pir>(new Pir());
  ring->components_.reserve(components.size());
  ring->input_to_canonical_.assign(components.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    ring->components_.push_back(std::move(components[order[pos]]));
    ring->input_to_canonical_[order[pos]] = pos;
  }
  ring->finish_init();
  return ring;
}

std::shared_ptr<const Pir> Pir::from_modulus(std::uint64_t modulus) {
  if (modulus <= 1) {
    fail(Errc::ModulusTooSmall, "modulus must be at least 2");
  }
  if (modulus > kMaxModulus) {
    fail(Errc::ModulusTooLarge, "modulus exceeds the trial-division guard");
  }
  auto ring = std::shared_ptr<Pir>(new Pir());
  std::uint64_t n = modulus;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      ring->components_.push_back(ChainRing::integers_mod(d, e));
    }
  }
  if (n > 1) ring->components_.push_back(ChainRing::integers_mod(n, 1));
  // trial division emits primes ascending, which equals the q-sorted order
  ring->input_to_canonical_.resize(ring->components_.size());
  std::iota(ring->input_to_canonical_.begin(), ring->input_to_canonical_.end(),
            0);
  ring->modulus_ = modulus;
  ring->finish_init();
  return ring;
}

std::string Pir::describe() const {
  if (modulus_) return "Z" + std::to_string(*modulus_);
  return signature_;
}

std::vector<ChainVal> Pir::parts(Elem x) const {
  std::vector<ChainVal> out(components_.size());
  for (std::size_t t = 0; t < components_.size(); ++t) out[t] = part(x, t);
  return out;
}

Elem Pir::from_parts(const std::vector<ChainVal>& parts) const {
  if (parts.size() != components_.size()) {
    fail(Errc::LengthMismatch, "component count mismatch");
  }
  Elem out = 0;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    if (parts[t] >= components_[t].size()) {
      fail(Errc::OutOfRange, "component value out of range");
    }
    out += parts[t] * strides_[t];
  }
  return out;
}

Elem Pir::add_slow(Elem a, Elem b) const {
  Elem out = 0;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    out += components_[t].add(part(a, t), part(b, t)) * strides_[t];
  }
  return out;
}

Elem Pir::mul_slow(Elem a, Elem b) const {
  Elem out = 0;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    out += components_[t].mul(part(a, t), part(b, t)) * strides_[t];
  }
  return out;
}

Elem Pir::neg_slow(Elem a) const {
  Elem out = 0;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    out += components_[t].neg(part(a, t)) * strides_[t];
  }
  return out;
}

bool Pir::is_unit(Elem a) const {
  for (std::size_t t = 0; t < components_.size(); ++t) {
    if (components_[t].valuation(part(a, t)) != 0) return false;
  }
  return true;
}

Elem Pir::unit_inverse(Elem a) const {
  Elem out = 0;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    out += components_[t].unit_inverse(part(a, t)) * strides_[t];
  }
  return out;
}

SupportSets Pir::support_sets(Elem a) const {
  SupportSets s;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    const ChainVal x = part(a, t);
    if (x == 0) continue;
    s.T.push_back(t + 1);
    if (components_[t].valuation(x) + 1 >= components_[t].e()) {
      s.Tbar.push_back(t + 1);  // x in J^(e-1) \ {0}
    }
  }
  return s;
}

Elem Pir::from_integer(std::uint64_t k) const {
  if (!modulus_) {
    fail(Errc::NotAZnRing, "ring was not built from a modulus");
  }
  if (k >= *modulus_) {
    fail(Errc::OutOfRange,
         "value " + std::to_string(k) + " outside [0, " +
             std::to_string(*modulus_) + ")");
  }
  Elem out = 0;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    out += (k % components_[t].size()) * strides_[t];
  }
  return out;
}

std::uint64_t Pir::to_integer(Elem a) const {
  if (!modulus_) {
    fail(Errc::NotAZnRing, "ring was not built from a modulus");
  }
  // iterative CRT reconstruction
  unsigned __int128 x = 0;
  std::uint64_t merged = 1;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    const std::uint64_t m = components_[t].size();
    const std::uint64_t target = part(a, t);
    const std::uint64_t x_mod_m = static_cast<std::uint64_t>(x % m);
    const ChainRing& comp = components_[t];
    const std::uint64_t diff = comp.sub(target % m, x_mod_m);
    const std::uint64_t step =
        comp.mul(diff, comp.unit_inverse(merged % m));
    x += static_cast<unsigned __int128>(merged) * step;
    merged *= m;
  }
  return static_cast<std::uint64_t>(x);
}

bool Pir::same_spec(const Pir& other) const {
  if (this == &other) return true;
  if (components_.size() != other.components_.size()) return false;
  for (std::size_t t = 0; t < components_.size(); ++t) {
    if (!components_[t].same_spec(other.components_[t])) return false;
  }
  return true;
}

void require_same_spec(const Pir& a, const Pir& b, const char* context) {
  if (!a.same_spec(b)) {
    fail(Errc::SpecMismatch, std::string(context) + ": ring specs differ (" +
                                 a.signature() + " vs " + b.signature() + ")");
  }
}

}  // namespace mpchom

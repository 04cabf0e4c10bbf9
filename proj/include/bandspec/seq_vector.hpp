#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace bandspec {

enum class TailFlag {
  Zero,     // entries at index >= size() are exactly zero
  Unknown,  // truncation may have dropped nonzero tail mass
};

// Finitely supported complex sequence with truncation metadata.
//
// Entries are stored as entries[n] * exp(log_scale); the shared log-scale
// factor lets power columns with astronomically large coefficients stay
// representable.
struct SeqVector {
  std::vector<std::complex<double>> entries;
  TailFlag tail = TailFlag::Zero;
  double log_scale = 0.0;

  SeqVector() = default;
  explicit SeqVector(std::size_t m, TailFlag t = TailFlag::Zero)
      : entries(m), tail(t) {}
  SeqVector(std::vector<std::complex<double>> e, TailFlag t = TailFlag::Zero,
            double ls = 0.0)
      : entries(std::move(e)), tail(t), log_scale(ls) {}

  static SeqVector basis(std::size_t k, std::size_t m) {
    SeqVector x(m);
    x.entries.at(k) = 1.0;
    return x;
  }

  std::size_t size() const { return entries.size(); }

  // Entry value in the linear range; overflows for extreme log_scale.
  std::complex<double> value(std::size_t n) const {
    return entries[n] * std::exp(log_scale);
  }

  // log|x_n|, or -inf for a zero entry.
  double log_magnitude(std::size_t n) const {
    return std::log(std::abs(entries[n])) + log_scale;
  }

  bool zero_tail() const { return tail == TailFlag::Zero; }
};

}  // namespace bandspec

#pragma once

#include <complex>
#include <span>

namespace horo {

/// Compensated (Kahan) accumulator. Works for double and std::complex<double>.
template <typename T>
class KahanSum {
 public:
  void add(const T& x) {
    const T y = x - carry_;
    const T t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  KahanSum& operator+=(const T& x) {
    add(x);
    return *this;
  }
  T value() const { return sum_; }

 private:
  T sum_{};
  T carry_{};
};

template <typename T>
T kahan_sum(std::span<const T> values) {
  KahanSum<T> acc;
  for (const T& v : values) acc.add(v);
  return acc.value();
}

}  // namespace horo

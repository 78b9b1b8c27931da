#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"

namespace cantorval {

/// Convergent positive nonincreasing series with exact term and tail access.
///
/// Every series the library handles is eventually geometric in blocks: a
/// finite prefix p_1..p_P followed by a block b_1..b_L repeated forever, the
/// t-th repetition scaled by ratio^t (0 < ratio < 1). All four Cantorval
/// families with eventually periodic parameters, repeated-term series and
/// multigeometric series fall in this class, and every tail sum is a finite
/// closed form.
///
/// Immutable after construction; safe to share between threads.
class TermStream {
 public:
  TermStream(std::vector<Rational> prefix, std::vector<Rational> block, Rational ratio, std::string label = {})
      : prefix_(std::move(prefix)), block_(std::move(block)), ratio_(std::move(ratio)), label_(std::move(label)) {
    if (block_.empty()) throw SpecError("TermStream: periodic block must be nonempty");
    if (!ratio_.is_positive() || !(ratio_ < Rational(1))) throw SpecError("TermStream: ratio must lie in (0,1)");
    auto check_positive = [](const std::vector<Rational>& v) {
      for (const auto& x : v)
        if (!x.is_positive()) throw SpecError("TermStream: terms must be positive (got " + x.str() + ")");
    };
    check_positive(prefix_);
    check_positive(block_);
    auto check_monotone = [](const Rational& a, const Rational& b, std::size_t n) {
      if (a < b)
        throw SpecError("TermStream: terms must be nonincreasing; term " + std::to_string(n) + " = " + a.str() +
                        " < term " + std::to_string(n + 1) + " = " + b.str());
    };
    for (std::size_t i = 1; i < prefix_.size(); ++i) check_monotone(prefix_[i - 1], prefix_[i], i);
    if (!prefix_.empty()) check_monotone(prefix_.back(), block_.front(), prefix_.size());
    for (std::size_t i = 1; i < block_.size(); ++i) check_monotone(block_[i - 1], block_[i], prefix_.size() + i);
    check_monotone(block_.back(), ratio_ * block_.front(), prefix_.size() + block_.size());

    block_suffix_.assign(block_.size() + 1, Rational());
    for (std::size_t i = block_.size(); i-- > 0;) block_suffix_[i] = block_suffix_[i + 1] + block_[i];
    periodic_total_ = block_suffix_[0] / (Rational(1) - ratio_);
    prefix_suffix_.assign(prefix_.size() + 1, Rational());
    prefix_suffix_[prefix_.size()] = periodic_total_;
    for (std::size_t i = prefix_.size(); i-- > 0;) prefix_suffix_[i] = prefix_suffix_[i + 1] + prefix_[i];
  }

  /// x_n, n >= 1.
  Rational term(std::size_t n) const {
    if (n == 0) throw std::out_of_range("TermStream::term: indices start at 1");
    if (n <= prefix_.size()) return prefix_[n - 1];
    std::size_t idx = n - prefix_.size() - 1;
    return block_[idx % block_.size()] * ratio_.pow(idx / block_.size());
  }

  /// r_n = sum_{i > n} x_i, n >= 0.
  Rational tail(std::size_t n) const {
    if (n <= prefix_.size()) return prefix_suffix_[n];
    std::size_t idx = n - prefix_.size();
    std::size_t t = idx / block_.size();
    std::size_t i = idx % block_.size();
    return ratio_.pow(t) * (block_suffix_[i] + ratio_ * periodic_total_);
  }

  Rational total() const { return prefix_suffix_[0]; }

  /// First k terms.
  std::vector<Rational> terms(std::size_t k) const {
    std::vector<Rational> out;
    out.reserve(k);
    for (std::size_t n = 1; n <= k; ++n) out.push_back(term(n));
    return out;
  }

  /// The remainder series (x_n)_{n > k}.
  TermStream suffix(std::size_t k) const {
    if (k <= prefix_.size()) {
      return TermStream(std::vector<Rational>(prefix_.begin() + static_cast<std::ptrdiff_t>(k), prefix_.end()), block_,
                        ratio_, label_);
    }
    std::size_t idx = k - prefix_.size();
    std::size_t t = idx / block_.size();
    std::size_t i = idx % block_.size();
    Rational scale = ratio_.pow(t);
    std::vector<Rational> pre, blk;
    for (std::size_t j = i; j < block_.size() && i != 0; ++j) pre.push_back(block_[j] * scale);
    Rational block_scale = i == 0 ? scale : scale * ratio_;
    for (const auto& b : block_) blk.push_back(b * block_scale);
    return TermStream(std::move(pre), std::move(blk), ratio_, label_);
  }

  const std::vector<Rational>& prefix() const noexcept { return prefix_; }
  const std::vector<Rational>& block() const noexcept { return block_; }
  const Rational& ratio() const noexcept { return ratio_; }
  std::size_t prefix_length() const noexcept { return prefix_.size(); }
  std::size_t period() const noexcept { return block_.size(); }
  const std::string& label() const noexcept { return label_; }

 private:
  std::vector<Rational> prefix_;
  std::vector<Rational> block_;
  Rational ratio_;
  std::string label_;
  std::vector<Rational> block_suffix_;
  std::vector<Rational> prefix_suffix_;
  Rational periodic_total_;
};

}  // namespace cantorval

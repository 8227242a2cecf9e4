#pragma once

// One datum together with every engine built on it.

#include <memory>
#include <vector>

#include "alcove/adlv.hpp"

namespace alcove {

class Workspace {
public:
  explicit Workspace(RootDatum datum, PivotRule pivot = {}, EngineLimits limits = {})
      : datum_(std::move(datum)),
        affine_(datum_),
        classes_(affine_),
        cocenter_(classes_, pivot, limits),
        adlv_(cocenter_) {}
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  static std::unique_ptr<Workspace> preset(const std::string& name, PivotRule pivot = {}, EngineLimits limits = {}) {
    return std::make_unique<Workspace>(RootDatum::preset(name), pivot, limits);
  }

  const RootDatum& datum() const { return datum_; }
  const AffineWeylGroup& affine() const { return affine_; }
  const ConjugacyClasses& classes() const { return classes_; }
  const CocenterEngine& cocenter() const { return cocenter_; }
  const AdlvEngine& adlv() const { return adlv_; }

  /// Elements of length <= max_len over the Kottwitz window, ordered by
  /// (Kottwitz value, length, element).
  std::vector<AffElt> elements_up_to(std::size_t max_len, Int kappa_window = 0) const {
    std::vector<AffElt> out;
    for (const auto& kappa : affine_.kappa_window(kappa_window))
      for (std::size_t len = 0; len <= max_len; ++len) {
        auto layer = affine_.elements_of_length(kappa, len);
        out.insert(out.end(), layer->begin(), layer->end());
      }
    return out;
  }

private:
  RootDatum datum_;
  AffineWeylGroup affine_;
  ConjugacyClasses classes_;
  CocenterEngine cocenter_;
  AdlvEngine adlv_;
};

}  // namespace alcove

#pragma once

#include <string>
#include <vector>

#include "achron/errors.hpp"

namespace achron {

// Ordered list of distinct modality names.  The order fixes the modality
// indices used by frames and compiled formulas.
class Signature {
public:
  Signature() = default;

  explicit Signature(std::vector<std::string> modalities)
      : mods_(std::move(modalities)) {
    if (mods_.empty()) fail(ErrorCode::Param, "signature needs at least one modality");
    for (std::size_t i = 0; i < mods_.size(); ++i) {
      if (mods_[i].empty()) fail(ErrorCode::Param, "empty modality name");
      for (std::size_t j = i + 1; j < mods_.size(); ++j)
        if (mods_[i] == mods_[j])
          fail(ErrorCode::Param, "duplicate modality name '" + mods_[i] + "'");
    }
  }

  const std::vector<std::string>& modalities() const { return mods_; }
  std::size_t size() const { return mods_.size(); }
  const std::string& name(std::size_t i) const { return mods_.at(i); }

  bool contains(const std::string& m) const {
    for (const auto& s : mods_) if (s == m) return true;
    return false;
  }

  std::size_t index(const std::string& m) const {
    for (std::size_t i = 0; i < mods_.size(); ++i)
      if (mods_[i] == m) return i;
    fail(ErrorCode::UnknownModality, "unknown modality '" + m + "'");
  }

  bool operator==(const Signature& other) const { return mods_ == other.mods_; }

private:
  std::vector<std::string> mods_;
};

}  // namespace achron

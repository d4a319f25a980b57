#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "multimom/errors.hpp"
#include "multimom/scalar.hpp"

namespace multimom {

enum class MomentKind { Raw, Central };

inline const char* to_string(MomentKind k) {
  return k == MomentKind::Raw ? "raw" : "central";
}

// Validated distribution parameters: `trials` draws over dim(probs)
// categories, with an implicit leftover category carrying 1 - sum(probs).
// Probabilities may sit on the simplex boundary (entries 0 or 1, sum == 1).
template <ScalarType S>
struct Params {
  std::int64_t trials = 1;
  std::vector<S> probs;

  int dim() const { return static_cast<int>(probs.size()); }
};

// Checks m >= 1, d >= 1, every entry in [0,1], and sum(probs) <= 1.  In
// float mode the sum check gets a 1e-12 slack so that values like
// 0.1*3 + 0.7 pass; entry bounds stay strict.
template <ScalarType S>
Params<S> validate_params(std::int64_t trials, std::vector<S> probs) {
  if (trials < 1) {
    throw BadTrialCount("trials must be at least 1, got " + std::to_string(trials));
  }
  if (probs.empty()) {
    throw EmptyDimension("probability vector must have at least one category");
  }
  const S zero = scalar_traits<S>::from_int(0);
  const S one = scalar_traits<S>::from_int(1);
  S sum = zero;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < zero || probs[i] > one) {
      throw SimplexViolation("probability " + std::to_string(i + 1) +
                             " is outside [0,1]: " + scalar_traits<S>::str(probs[i]));
    }
    sum += probs[i];
  }
  bool ok;
  if constexpr (scalar_traits<S>::exact) {
    ok = sum <= one;
  } else {
    ok = sum <= 1.0 + 1e-12;
  }
  if (!ok) {
    throw SimplexViolation("probabilities sum to " + scalar_traits<S>::str(sum) +
                           " which exceeds 1");
  }
  return Params<S>{trials, std::move(probs)};
}

// Rejects moment index tuples whose length is not 1..4 or whose entries
// fall outside 1..d.
template <ScalarType S>
void check_indices(const Params<S>& params, std::span<const int> indices) {
  if (indices.empty() || indices.size() > 4) {
    throw std::invalid_argument("index tuple length must be 1..4, got " +
                                std::to_string(indices.size()));
  }
  for (int ix : indices) {
    if (ix < 1 || ix > params.dim()) {
      throw IndexOutOfRange("index " + std::to_string(ix) + " is outside 1.." +
                            std::to_string(params.dim()));
    }
  }
}

// Which positions of an index tuple coincide, in canonical form: position 0
// gets block label 0 and each later position gets either an existing label
// (first match) or the smallest unused one.  (1,1,2,2) and (3,3,7,7) both
// canonicalize to 0011, so formula dispatch depends only on the coincidence
// shape, never on the index values.
class EqualityPattern {
 public:
  EqualityPattern() = default;

  static EqualityPattern of(std::span<const int> indices) {
    EqualityPattern p;
    p.len_ = static_cast<std::uint8_t>(indices.size());
    std::array<int, 4> seen{};  // block label -> representative index value
    int blocks = 0;
    for (std::size_t pos = 0; pos < indices.size(); ++pos) {
      int label = -1;
      for (int b = 0; b < blocks; ++b) {
        if (seen[b] == indices[pos]) {
          label = b;
          break;
        }
      }
      if (label < 0) {
        label = blocks++;
        seen[label] = indices[pos];
      }
      p.code_[pos] = static_cast<std::uint8_t>(label);
    }
    p.blocks_ = static_cast<std::uint8_t>(blocks);
    return p;
  }

  int order() const { return len_; }
  int blocks() const { return blocks_; }
  std::uint8_t at(int pos) const { return code_[static_cast<std::size_t>(pos)]; }

  // Digits packed base 10, e.g. 0011 -> 11.  Safe because block labels are
  // 0..3; used as a switch key by the formula dispatch.
  int packed() const {
    int v = 0;
    for (int i = 0; i < len_; ++i) v = v * 10 + code_[static_cast<std::size_t>(i)];
    return v;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < len_; ++i)
      s.push_back(static_cast<char>('0' + code_[static_cast<std::size_t>(i)]));
    return s;
  }

  bool operator==(const EqualityPattern&) const = default;

 private:
  std::array<std::uint8_t, 4> code_{};
  std::uint8_t len_ = 0;
  std::uint8_t blocks_ = 0;
};

inline EqualityPattern canonical_pattern(std::span<const int> indices) {
  return EqualityPattern::of(indices);
}

// All canonical patterns of the given order: 1, 2, 5, 15 of orders 1..4
// (restricted-growth strings).
inline std::vector<EqualityPattern> all_patterns(int order) {
  std::vector<EqualityPattern> out;
  std::array<int, 4> code{};
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == order) {
      out.push_back(EqualityPattern::of(std::span<const int>(code.data(),
                                                             static_cast<std::size_t>(order))));
      return;
    }
    for (int label = 0; label <= max_used + 1 && label < 4; ++label) {
      code[static_cast<std::size_t>(pos)] = label;
      self(self, pos + 1, label > max_used ? label : max_used);
    }
  };
  rec(rec, 0, -1);
  return out;
}

// Short stable fingerprint of (trials, probs), used to tag results so a
// report row can be traced back to the exact parameter cell that produced
// it.  FNV-1a over the canonical string rendering.
template <ScalarType S>
std::string params_digest(const Params<S>& params) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  mix(std::to_string(params.trials));
  for (const S& p : params.probs) mix(scalar_traits<S>::str(p));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace multimom

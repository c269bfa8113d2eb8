#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lg36 {

enum class ErrorCode {
  kInvalidArgument,
  kFieldMismatch,
  kRootsNotSplit,
  kRankDeficient,
  kNotSymmetric,
  kNotLagrangian,
  kNotTransverse,
  kChartFailure,
  kNotSplit,
  kInOmega,
  kNotInOmega,
  kRankUnstable,
  kNetDim,
  kSyzygyFail,
  kDegeneratePlane,
  kNotThreePoints,
  kInOmegaConfig,
  kSameSpan,
  kTooManyPoints,
  kNotOnSection,
  kCubicInSection,
  kNonReduced,
  kWrongLength,
  kNoHyperplane,
  kKernelDim,
  kZeroRestriction,
  kEigenDegenerate,
  kConjugacyFail,
  kResidualDegenerate,
  kLineCount,
  kNotHyperplane,
  kNotOnFx,
  kSchemaMismatch,
};

// Upper-case tag used in JSON output and CLI diagnostics, e.g. "NOT_SPLIT".
std::string_view error_tag(ErrorCode code);

// Outcomes caused by an unlucky random configuration rather than a bug; callers
// that own a seed stream resample on these.
bool is_resamplable(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_tag(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lg36

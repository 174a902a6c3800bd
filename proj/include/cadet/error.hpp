#pragma once

#include <stdexcept>
#include <string>

namespace cadet {

enum class errc {
  missing_file,
  header_mismatch,
  unsupported_dtype,
  io_failure,
  invalid_spacing,
  not_isotropic,
  negative_sigma,
  invalid_params,
  frame_mismatch,
  dims_mismatch,
  non_positive_gamma,
  out_of_range_input,
  not_cubic,
  bad_input_size,
  shape_mismatch,
  stale_cache,
  no_pairable_datasets,
  insufficient_patients,
  infeasible,
  no_lesions,
  sensitivity_unreachable,
  bad_k,
  placement_failure,
  bad_config,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::missing_file: return "MissingFile";
    case errc::header_mismatch: return "HeaderMismatch";
    case errc::unsupported_dtype: return "UnsupportedDtype";
    case errc::io_failure: return "IoFailure";
    case errc::invalid_spacing: return "InvalidSpacing";
    case errc::not_isotropic: return "NotIsotropic";
    case errc::negative_sigma: return "NegativeSigma";
    case errc::invalid_params: return "InvalidParams";
    case errc::frame_mismatch: return "FrameMismatch";
    case errc::dims_mismatch: return "DimsMismatch";
    case errc::non_positive_gamma: return "NonPositiveGamma";
    case errc::out_of_range_input: return "OutOfRangeInput";
    case errc::not_cubic: return "NotCubic";
    case errc::bad_input_size: return "BadInputSize";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::stale_cache: return "StaleCache";
    case errc::no_pairable_datasets: return "NoPairableDatasets";
    case errc::insufficient_patients: return "InsufficientPatients";
    case errc::infeasible: return "Infeasible";
    case errc::no_lesions: return "NoLesions";
    case errc::sensitivity_unreachable: return "SensitivityUnreachable";
    case errc::bad_k: return "BadK";
    case errc::placement_failure: return "PlacementFailure";
    case errc::bad_config: return "BadConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace cadet

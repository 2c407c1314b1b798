// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABELOS_CORE_ERRORS_HPP
#define ABELOS_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abelos {

// Error categories map onto the CLI / C-API exit codes:
// validation -> 2, cap exceeded -> 3, bound violation -> 4.
enum class errc {
  composite_p,
  too_large,
  zero_input,
  singular_curve,
  cap_exceeded,
  inconsistent_counts,
  invalid_weil_data,
  trace_out_of_range,
  odd_h2,
  outside_polygon,
  unlicensed_ell,
  wrong_specialization,
  point_cap_exceeded,
  enumeration_cap_exceeded,
  bound_violation,
  parse_error,
};

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  errc code() const { return code_; }

  bool is_cap() const {
    return code_ == errc::cap_exceeded || code_ == errc::too_large ||
           code_ == errc::point_cap_exceeded ||
           code_ == errc::enumeration_cap_exceeded;
  }
  bool is_violation() const { return code_ == errc::bound_violation; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) {
  throw error(c, msg);
}

}  // namespace abelos

#endif

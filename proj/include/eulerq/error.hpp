// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace eulerq {

enum class Errc {
  invalid_argument,    // malformed input, missing/extra parameters, caps exceeded
  division_by_zero,    // field division by a zero element
  non_invertible,      // series/matrix without an invertible leading term
  order_mismatch,      // truncated objects of different orders combined
  insufficient_length, // not enough coefficients/moments for the request
  not_quasi_definite,  // a vanishing orthogonal-polynomial norm
  internal,            // an asserted identity failed (library bug)
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eulerq

#pragma once

#include <stdexcept>
#include <string>

namespace podbond {

/// Failure categories raised by library operations. The CLI maps these
/// onto exit codes, so keep the grouping meaningful.
enum class Errc {
  invalid_argument,
  parse,
  undefined_product,
  not_boundary,
  not_on_x,
  not_rank_one,
  zero_matrix,
  not_isotropic,
  no_left_right,
  wrong_class,
  vertex_no_moduli,
  zero_family,
  degenerate_parametrization,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace podbond

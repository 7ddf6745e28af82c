#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betti {

enum class Errc {
  ZeroOrConstant,
  NoRealRoot,
  UnboundedAbove,
  NegativeInput,
  NegativeK,
  IndexOutOfRange,
  UnsupportedDegree,
  BadDegree,
  NegativeCount,
  UnsupportedRange,
  RangeInvalid,
  InvalidArgument,
  DivisionByZero,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace betti

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "holoforms/form.hpp"
#include "holoforms/rational.hpp"

namespace holoforms {

// Syntax error with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

// "p/q" with optional sign; whole string.
Rational parse_rational(std::string_view text);

// "re", "im i" or "re+im i" without spaces around 'i', e.g. "3-2i", "i",
// "-1/2i", "1/2+3/4i"; whole string.
Scalar parse_scalar(std::string_view text);

// Form expression: sum of terms `coef*e<indices>`; coefficient omitted for
// +-1, parenthesized when complex.  Index runs: single characters 'm', 'p',
// '1'..'9'; when the run contains '.', the dot-separated pieces are whole
// index tokens (for transverse indices past 9).  'm'/'p' are only valid in
// lightcone frames.  A bare coefficient term is a degree-0 form.  All terms
// must have one common degree.
Form parse_form(std::string_view text, const FrameContext& frame);

// Spinor expression over subsets of {1..k}: basis '1' (empty subset) or
// 'e' followed by strictly increasing digits; terms optionally scaled by a
// rational/imaginary coefficient; parenthesized subexpressions distribute,
// e.g. "i(e12+e34)".  Returns subset-mask -> coefficient.
std::map<Mask, Scalar> parse_spinor_coeffs(std::string_view text, int k);

}  // namespace holoforms

#pragma once

#include <stdexcept>
#include <string>

namespace qch {

// Failure conditions that callers are expected to be able to distinguish.
enum class Errc {
  division_by_zero,   // inverse or division by the zero scalar
  eval_at_pole,       // denominator vanishes at the evaluation point
  not_a_partition,    // parts not weakly decreasing positive
  not_standard,       // tableau fails row/column strictness
  not_closed,         // closure system for an R-matrix is singular
  not_orientable,     // quadratic relations cannot be oriented into rules
  not_rank_one,       // antisymmetrizer image is not a line
  singular,           // exact linear solve hit a singular matrix
  bad_input,          // malformed text, file, or argument
};

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace qch

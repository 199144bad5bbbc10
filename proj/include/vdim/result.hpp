#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "vdim/bigreal.hpp"

namespace vdim {

struct EvalOptions {
  long precision_bits = kDefaultPrecisionBits;
  // Number of precision doublings attempted before giving up on integrality.
  int max_escalations = 3;
};

// A certified integer together with the diagnostics of the evaluation that produced it.
struct VerlindeResult {
  mpz_class value;
  BigReal residual;
  long precision_bits = 0;
  int term_count = 0;
  std::string group_label;
  std::vector<int> level;
  int genus = 0;
};

class IntegralityError : public Error {
 public:
  IntegralityError(const std::string& what, VerlindeResult diagnostic)
      : Error(what), diagnostic_(std::move(diagnostic)) {}
  const VerlindeResult& diagnostic() const { return diagnostic_; }

 private:
  VerlindeResult diagnostic_;
};

}  // namespace vdim

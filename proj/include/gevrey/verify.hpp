#ifndef GEVREY_VERIFY_HPP
#define GEVREY_VERIFY_HPP

#include <ostream>

#include "gevrey/filter.hpp"
#include "gevrey/report.hpp"

namespace gevrey {

struct VerifyOptions {
  FilterConfig filter;
  double eps = kPi / 4.0;
  double eta = 2.0;
  unsigned jobs = 1;
  std::ostream* timing = nullptr;  // per-check wall time, kept out of the report
};

/// Runs every identity, bound and witness the construction makes checkable.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace gevrey

#endif  // GEVREY_VERIFY_HPP

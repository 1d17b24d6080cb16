#pragma once

#include <stdexcept>
#include <string>

namespace lebgeo {

struct invalid_degree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct domain_violation : std::domain_error {
  using std::domain_error::domain_error;
};

struct not_unisolvent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct out_of_domain : std::domain_error {
  using std::domain_error::domain_error;
};

struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a sign decision could not be made below the precision cap
struct needs_more_precision : std::runtime_error {
  int degree;
  int interval;
  int bits_tried;
  needs_more_precision(int n, int k, int bits)
      : std::runtime_error("sign decision undecided at degree " + std::to_string(n) +
                           ", interval " + std::to_string(k) + " after " + std::to_string(bits) +
                           " bits"),
        degree(n), interval(k), bits_tried(bits) {}
};

// local-maxima counts kept changing under grid doubling
struct unstable_count : std::runtime_error {
  std::pair<int, int> coarse;
  std::pair<int, int> fine;
  unstable_count(std::pair<int, int> a, std::pair<int, int> b)
      : std::runtime_error("local-maxima count unstable under grid doubling: " +
                           std::to_string(a.first) + "/" + std::to_string(a.second) + " vs " +
                           std::to_string(b.first) + "/" + std::to_string(b.second)),
        coarse(a), fine(b) {}
};

}  // namespace lebgeo

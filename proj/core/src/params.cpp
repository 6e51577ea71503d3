#include "apery9/params.hpp"

#include <stdexcept>

namespace apery9 {

AperyParams::AperyParams(std::uint64_t r, std::uint64_t s) : r_(r), s_(s) {
  if (r == 0) throw std::invalid_argument("r must be a positive integer");
  if (r > kMaxExponent || s > kMaxExponent)
    throw std::invalid_argument("exponent exceeds 10^18");
}

std::string AperyParams::to_string() const {
  return "(" + std::to_string(r_) + "," + std::to_string(s_) + ")";
}

}  // namespace apery9

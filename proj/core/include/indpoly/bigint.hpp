#ifndef INDPOLY_BIGINT_HPP
#define INDPOLY_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace indpoly {

// Clique bouquets and heavily whiskered graphs overflow 64-bit counts
// quickly, so every coefficient and evaluation is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace indpoly

#endif

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace icc::linalg {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

struct ExtendedGcd {
  Int g;  // non-negative
  Int x;
  Int y;  // a*x + b*y == g
};

ExtendedGcd extended_gcd(const Int& a, const Int& b);

Int lcm(const Int& a, const Int& b);

std::optional<std::int64_t> to_int64(const Int& value);

std::string to_string(const Int& value);
std::string to_string(const IntVector& v);

/// max |v_i|; zero for the empty vector.
Int max_norm(const IntVector& v);

bool is_zero(const IntVector& v);

IntVector make_vector(std::initializer_list<long long> values);

}  // namespace icc::linalg

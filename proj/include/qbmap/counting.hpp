#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qbmap {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);
BigInt factorial(int n);

/// Well-labeled forests with sigma trees and n tree edges.
BigInt count_forests(int n, int sigma);
/// Bridges of length sigma.
BigInt count_bridges(int sigma);
/// Rooted quadrangulations with n internal faces and boundary length 2*sigma.
BigInt count_quadrangulations(int n, int sigma);
/// kind is one of 'F', 'B', 'Q'.
BigInt count_formula(char kind, int n, int sigma);

}  // namespace qbmap

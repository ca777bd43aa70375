#pragma once

#include <complex>

namespace alcove {

// Complex dilogarithm Li₂(z) on the principal branch.
std::complex<double> dilog(std::complex<double> z);

}  // namespace alcove

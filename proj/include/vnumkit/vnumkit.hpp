#pragma once

// Umbrella header: exact v-number computations for monomial ideals, with
// the clutter, polarization, and Stanley-Reisner homology machinery they
// lean on.

#include "vnumkit/monomial.hpp"
#include "vnumkit/ideal.hpp"
#include "vnumkit/decomposition.hpp"
#include "vnumkit/polarization.hpp"
#include "vnumkit/clutter.hpp"
#include "vnumkit/complex.hpp"
#include "vnumkit/vnumber.hpp"
#include "vnumkit/homology.hpp"
#include "vnumkit/io.hpp"
#include "vnumkit/survey.hpp"
#include "vnumkit/verify.hpp"
#include "vnumkit/report.hpp"

namespace vnumkit {
inline constexpr const char* version = "0.1.0";
}

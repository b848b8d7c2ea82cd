#pragma once

// Umbrella header.

#include "orbivol/bernoulli.hpp"
#include "orbivol/covolume.hpp"
#include "orbivol/coxeter.hpp"
#include "orbivol/error.hpp"
#include "orbivol/intpoly.hpp"
#include "orbivol/lobachevsky.hpp"
#include "orbivol/modp.hpp"
#include "orbivol/number_field.hpp"
#include "orbivol/numkernel.hpp"
#include "orbivol/primes.hpp"
#include "orbivol/prism.hpp"
#include "orbivol/quadrature.hpp"
#include "orbivol/zeta.hpp"

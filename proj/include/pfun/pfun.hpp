#pragma once

// Umbrella header for the whole library.

#include "pfun/convexity_lab.hpp"
#include "pfun/forward_pfunctions.hpp"
#include "pfun/inverse_pfunctions.hpp"
#include "pfun/means.hpp"
#include "pfun/numerics.hpp"
#include "pfun/special_constants.hpp"

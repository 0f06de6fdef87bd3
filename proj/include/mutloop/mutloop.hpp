#pragma once

#include "mutloop/arith.hpp"
#include "mutloop/cone.hpp"
#include "mutloop/conjecture.hpp"
#include "mutloop/entropy.hpp"
#include "mutloop/lp.hpp"
#include "mutloop/rng.hpp"
#include "mutloop/seed.hpp"
#include "mutloop/spectra.hpp"
#include "mutloop/stability.hpp"
#include "mutloop/surfaces.hpp"
#include "mutloop/tropical.hpp"

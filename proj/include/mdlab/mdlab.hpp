#pragma once

// Umbrella header.

#include "binedge.hpp"
#include "closure.hpp"
#include "core.hpp"
#include "determinantal.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "latticepaths.hpp"
#include "linalg.hpp"
#include "schubert.hpp"
#include "symfunc.hpp"
#include "verify.hpp"

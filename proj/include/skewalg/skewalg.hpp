#pragma once

/// Umbrella header.

#include "algset.hpp"
#include "codes.hpp"
#include "errors.hpp"
#include "evalcodes.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "linearized.hpp"
#include "parse.hpp"
#include "rational.hpp"
#include "skewpoly.hpp"
#include "spbw.hpp"
#include "spbwsets.hpp"

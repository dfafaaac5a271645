#pragma once

#include "dq/error.hpp"
#include "dq/expr.hpp"
#include "dq/fock.hpp"
#include "dq/gaussian.hpp"
#include "dq/grid.hpp"
#include "dq/kernel.hpp"
#include "dq/oscillator.hpp"
#include "dq/params.hpp"
#include "dq/phase_poly.hpp"
#include "dq/special.hpp"
#include "dq/star.hpp"
#include "dq/star_exponential.hpp"

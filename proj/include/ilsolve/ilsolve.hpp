#pragma once

#include "ilsolve/error.hpp"
#include "ilsolve/rounding.hpp"
#include "ilsolve/interval.hpp"
#include "ilsolve/matrix.hpp"
#include "ilsolve/lu.hpp"
#include "ilsolve/linsys.hpp"
#include "ilsolve/cheap_bounds.hpp"
#include "ilsolve/verified_solve.hpp"
#include "ilsolve/classic.hpp"
#include "ilsolve/magnitude.hpp"

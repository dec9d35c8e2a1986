#pragma once

#include "dumas/arith.hpp"
#include "dumas/bigint.hpp"
#include "dumas/census.hpp"
#include "dumas/constants.hpp"
#include "dumas/criteria.hpp"
#include "dumas/newton.hpp"
#include "dumas/poly.hpp"
#include "dumas/verify.hpp"

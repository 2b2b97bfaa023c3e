#pragma once

#include "golden/analysis.hpp"
#include "golden/binet.hpp"
#include "golden/errors.hpp"
#include "golden/genfunc.hpp"
#include "golden/polynomial.hpp"
#include "golden/precision.hpp"
#include "golden/rational.hpp"
#include "golden/recurrence.hpp"
#include "golden/roots.hpp"
#include "golden/trapezoid.hpp"

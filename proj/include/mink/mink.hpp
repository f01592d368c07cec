#pragma once

#include "mink/completeness.hpp"
#include "mink/constructions.hpp"
#include "mink/errors.hpp"
#include "mink/hull.hpp"
#include "mink/linalg.hpp"
#include "mink/lp.hpp"
#include "mink/metrics.hpp"
#include "mink/norm.hpp"
#include "mink/polytope.hpp"
#include "mink/rational.hpp"
#include "mink/walsh.hpp"

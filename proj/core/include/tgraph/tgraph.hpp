#pragma once

#include "tgraph/claims.hpp"
#include "tgraph/core_math.hpp"
#include "tgraph/curves.hpp"
#include "tgraph/errors.hpp"
#include "tgraph/lengths.hpp"
#include "tgraph/oracle.hpp"
#include "tgraph/parallel.hpp"
#include "tgraph/probe.hpp"
#include "tgraph/quadrature.hpp"
#include "tgraph/solve.hpp"

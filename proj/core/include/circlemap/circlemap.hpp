#pragma once

#include "circlemap/energy.hpp"
#include "circlemap/error.hpp"
#include "circlemap/field.hpp"
#include "circlemap/field_io.hpp"
#include "circlemap/grid.hpp"
#include "circlemap/optimize.hpp"
#include "circlemap/oracle.hpp"
#include "circlemap/problem.hpp"
#include "circlemap/report.hpp"
#include "circlemap/topology.hpp"
#include "circlemap/verify.hpp"

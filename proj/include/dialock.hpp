#pragma once

#include "dialock/core.hpp"
#include "dialock/oracle.hpp"
#include "dialock/solver.hpp"
#include "dialock/stats.hpp"
#include "dialock/variation.hpp"

#pragma once

#include "laurent/bounded_sum.hpp"
#include "laurent/builder.hpp"
#include "laurent/constellation.hpp"
#include "laurent/decision.hpp"
#include "laurent/error.hpp"
#include "laurent/io.hpp"
#include "laurent/oracle.hpp"
#include "laurent/partition.hpp"
#include "laurent/passport.hpp"
#include "laurent/perm.hpp"
#include "laurent/plan.hpp"

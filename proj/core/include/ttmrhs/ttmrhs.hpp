#pragma once

#include "ttmrhs/errors.hpp"
#include "ttmrhs/expansion.hpp"
#include "ttmrhs/metrics.hpp"
#include "ttmrhs/smw.hpp"
#include "ttmrhs/solvers.hpp"
#include "ttmrhs/types.hpp"

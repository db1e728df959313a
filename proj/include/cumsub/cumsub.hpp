#pragma once

#include "cumsub/analysis/checks.hpp"
#include "cumsub/analysis/discrepancy.hpp"
#include "cumsub/analysis/formulas.hpp"
#include "cumsub/analysis/parallel.hpp"
#include "cumsub/analysis/periodicity.hpp"
#include "cumsub/analysis/sampling.hpp"
#include "cumsub/analysis/scan.hpp"
#include "cumsub/core.hpp"
#include "cumsub/solver.hpp"

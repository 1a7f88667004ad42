#pragma once

#include "polysel/analysis.hpp"
#include "polysel/config.hpp"
#include "polysel/errors.hpp"
#include "polysel/interval.hpp"
#include "polysel/lagrange.hpp"
#include "polysel/oracle.hpp"
#include "polysel/selection.hpp"
#include "polysel/separation.hpp"
#include "polysel/setvalued.hpp"

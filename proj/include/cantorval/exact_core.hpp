#pragma once

// Exact scalars, point sets and closed-interval unions.

#include "cantorval/errors.hpp"
#include "cantorval/interval_set.hpp"
#include "cantorval/point_set.hpp"
#include "cantorval/rational.hpp"

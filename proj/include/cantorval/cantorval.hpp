#pragma once

#include "cantorval/classify.hpp"
#include "cantorval/exact_core.hpp"
#include "cantorval/families.hpp"
#include "cantorval/interval_engine.hpp"
#include "cantorval/json_io.hpp"
#include "cantorval/report.hpp"
#include "cantorval/series_core.hpp"
#include "cantorval/tightness.hpp"
#include "cantorval/uniqueness.hpp"

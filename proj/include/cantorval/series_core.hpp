#pragma once

// Term streams, finite subsum sets and Kakeya conditions.

#include "cantorval/kakeya.hpp"
#include "cantorval/subsums.hpp"
#include "cantorval/term_stream.hpp"

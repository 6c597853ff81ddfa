#ifndef FUZZYSHRINK_FUZZYSHRINK_HPP
#define FUZZYSHRINK_FUZZYSHRINK_HPP

#include "fuzzyshrink/errors.hpp"
#include "fuzzyshrink/fuzzy_number.hpp"
#include "fuzzyshrink/metrics.hpp"
#include "fuzzyshrink/regression.hpp"
#include "fuzzyshrink/shrinkage.hpp"
#include "fuzzyshrink/datasets.hpp"

#endif  // FUZZYSHRINK_FUZZYSHRINK_HPP

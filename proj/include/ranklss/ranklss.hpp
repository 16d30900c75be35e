#pragma once

// Umbrella header.

#include "ranklss/closed_forms.hpp"
#include "ranklss/data_matrix.hpp"
#include "ranklss/errors.hpp"
#include "ranklss/function_descriptor.hpp"
#include "ranklss/harness.hpp"
#include "ranklss/hypothesis_tests.hpp"
#include "ranklss/lss_moments.hpp"
#include "ranklss/oracle.hpp"
#include "ranklss/parallel.hpp"
#include "ranklss/random.hpp"
#include "ranklss/rank_correlation.hpp"
#include "ranklss/simulation.hpp"
#include "ranklss/spectral_law.hpp"
#include "ranklss/spectrum.hpp"
#include "ranklss/tracy_widom.hpp"

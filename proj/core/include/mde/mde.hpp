#pragma once

#include "mde/ar_mde.hpp"
#include "mde/baselines.hpp"
#include "mde/distributions.hpp"
#include "mde/error.hpp"
#include "mde/generators.hpp"
#include "mde/linalg.hpp"
#include "mde/lr_mde.hpp"
#include "mde/measures.hpp"
#include "mde/monte_carlo.hpp"
#include "mde/nelder_mead.hpp"
#include "mde/report_io.hpp"
#include "mde/two_stage.hpp"

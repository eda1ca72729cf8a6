#pragma once

#include "r5/compare.hpp"
#include "r5/env.hpp"
#include "r5/errors.hpp"
#include "r5/mt19937.hpp"
#include "r5/record.hpp"
#include "r5/sampling.hpp"
#include "r5/seed.hpp"
#include "r5/selftest.hpp"
#include "r5/state_io.hpp"
#include "r5/vcs.hpp"
#include "r5/walks.hpp"

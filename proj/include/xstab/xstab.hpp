#pragma once

#include "xstab/classify.hpp"
#include "xstab/constructions.hpp"
#include "xstab/enumerate.hpp"
#include "xstab/errors.hpp"
#include "xstab/graph.hpp"
#include "xstab/graph6.hpp"
#include "xstab/limits.hpp"
#include "xstab/search.hpp"
#include "xstab/solvers.hpp"
#include "xstab/sweep.hpp"

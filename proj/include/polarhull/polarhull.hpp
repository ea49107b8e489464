#pragma once

#include "polarhull/binning.hpp"
#include "polarhull/datasets.hpp"
#include "polarhull/errors.hpp"
#include "polarhull/fence.hpp"
#include "polarhull/geometry.hpp"
#include "polarhull/horizon.hpp"
#include "polarhull/hull_algorithms.hpp"
#include "polarhull/instrumentation.hpp"
#include "polarhull/parallel.hpp"
#include "polarhull/pipeline.hpp"
#include "polarhull/predicates.hpp"
#include "polarhull/svg_render.hpp"

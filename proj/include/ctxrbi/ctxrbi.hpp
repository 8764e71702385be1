#pragma once

#include "ctxrbi/errors.hpp"
#include "ctxrbi/events.hpp"
#include "ctxrbi/game.hpp"
#include "ctxrbi/metrics.hpp"
#include "ctxrbi/pchip.hpp"
#include "ctxrbi/pipeline.hpp"
#include "ctxrbi/report.hpp"
#include "ctxrbi/state.hpp"
#include "ctxrbi/summary.hpp"
#include "ctxrbi/we_table.hpp"

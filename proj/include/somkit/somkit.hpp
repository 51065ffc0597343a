#pragma once

#include "somkit/analytics.hpp"
#include "somkit/classify.hpp"
#include "somkit/config.hpp"
#include "somkit/dataset.hpp"
#include "somkit/errors.hpp"
#include "somkit/grid.hpp"
#include "somkit/model.hpp"
#include "somkit/normalize.hpp"
#include "somkit/persistence.hpp"
#include "somkit/training.hpp"
#include "somkit/viz.hpp"
#include "somkit/weights.hpp"

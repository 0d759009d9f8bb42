#pragma once

#include "bcmas/error.hpp"
#include "bcmas/model.hpp"
#include "bcmas/parser.hpp"
#include "bcmas/grounder.hpp"
#include "bcmas/program.hpp"
#include "bcmas/engine.hpp"
#include "bcmas/transition.hpp"
#include "bcmas/compose.hpp"
#include "bcmas/manifest.hpp"
#include "bcmas/random.hpp"

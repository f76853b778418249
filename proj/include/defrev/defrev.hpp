#pragma once

#include "literal.hpp"
#include "theory.hpp"
#include "text_format.hpp"
#include "engine.hpp"
#include "structure.hpp"
#include "revision.hpp"
#include "sat_bridge.hpp"
#include "agm.hpp"

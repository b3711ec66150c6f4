#pragma once

// Umbrella header. nim43.hpp is deliberately left out; include it directly.

#include "slownim/critical.hpp"
#include "slownim/error.hpp"
#include "slownim/fast.hpp"
#include "slownim/game.hpp"
#include "slownim/grid.hpp"
#include "slownim/m_rule.hpp"
#include "slownim/memo.hpp"
#include "slownim/natural.hpp"
#include "slownim/oracle.hpp"
#include "slownim/position.hpp"
#include "slownim/verify.hpp"

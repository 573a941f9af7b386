#pragma once

#include "arith.hpp"
#include "catalog.hpp"
#include "chow.hpp"
#include "divisor.hpp"
#include "fan.hpp"
#include "jet.hpp"
#include "nefcone.hpp"
#include "picard.hpp"
#include "polyhedral.hpp"
#include "search.hpp"

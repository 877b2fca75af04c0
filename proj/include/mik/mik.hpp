#pragma once

#include "mik/monomial.hpp"
#include "mik/ideal.hpp"
#include "mik/prime.hpp"
#include "mik/decomposition.hpp"
#include "mik/clutter.hpp"
#include "mik/certify.hpp"
#include "mik/enumerate.hpp"
#include "mik/text.hpp"
#include "mik/replay.hpp"
#include "mik/report.hpp"

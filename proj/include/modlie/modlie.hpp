#pragma once

#include "modlie/construct.hpp"
#include "modlie/cpa.hpp"
#include "modlie/derive.hpp"
#include "modlie/error.hpp"
#include "modlie/field.hpp"
#include "modlie/io.hpp"
#include "modlie/lie.hpp"
#include "modlie/matrix.hpp"
#include "modlie/poly.hpp"
#include "modlie/polysolve.hpp"
#include "modlie/taut.hpp"

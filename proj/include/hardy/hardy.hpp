#pragma once

#include "hardy/continuous.hpp"
#include "hardy/discrete.hpp"
#include "hardy/errors.hpp"
#include "hardy/fuzz.hpp"
#include "hardy/json_io.hpp"
#include "hardy/muckenhoupt.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/report.hpp"
#include "hardy/summation.hpp"
#include "hardy/weight.hpp"

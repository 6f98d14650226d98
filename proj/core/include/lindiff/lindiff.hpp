#pragma once

#include "lindiff/dimension.hpp"
#include "lindiff/diffmodule.hpp"
#include "lindiff/errors.hpp"
#include "lindiff/normalform.hpp"
#include "lindiff/numpoly.hpp"
#include "lindiff/ore_algebra.hpp"
#include "lindiff/scalars.hpp"
#include "lindiff/variety.hpp"

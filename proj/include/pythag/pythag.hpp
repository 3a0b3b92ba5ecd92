#pragma once

#include "pythag/compose.hpp"
#include "pythag/core.hpp"
#include "pythag/decomp.hpp"
#include "pythag/errors.hpp"
#include "pythag/gen.hpp"
#include "pythag/numeric.hpp"
#include "pythag/theorems.hpp"

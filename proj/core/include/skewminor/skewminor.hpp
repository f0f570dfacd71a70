#pragma once

#include "skewminor/clans.hpp"
#include "skewminor/errors.hpp"
#include "skewminor/field.hpp"
#include "skewminor/generators.hpp"
#include "skewminor/io.hpp"
#include "skewminor/matrix.hpp"
#include "skewminor/minors.hpp"
#include "skewminor/subset.hpp"
#include "skewminor/witness.hpp"

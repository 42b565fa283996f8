#pragma once

#include "cartan.hpp"
#include "criterion.hpp"
#include "error.hpp"
#include "maass_selberg.hpp"
#include "matrix.hpp"
#include "parabolic.hpp"
#include "roots.hpp"
#include "weyl.hpp"

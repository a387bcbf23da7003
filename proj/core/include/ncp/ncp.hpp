#pragma once

#include "ncp/ascent.hpp"
#include "ncp/canonical.hpp"
#include "ncp/code.hpp"
#include "ncp/codeword.hpp"
#include "ncp/descent.hpp"
#include "ncp/errors.hpp"
#include "ncp/geometry.hpp"
#include "ncp/json_io.hpp"
#include "ncp/morphism.hpp"
#include "ncp/parallel.hpp"
#include "ncp/trunk.hpp"

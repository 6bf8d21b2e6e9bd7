#pragma once

#include "zonocone/rational.hpp"
#include "zonocone/linalg.hpp"
#include "zonocone/scheme.hpp"
#include "zonocone/mixed_volume.hpp"
#include "zonocone/config_space.hpp"
#include "zonocone/rigid.hpp"
#include "zonocone/cone.hpp"
#include "zonocone/symmetry.hpp"
#include "zonocone/verify.hpp"
#include "zonocone/io.hpp"

#pragma once

#include "apollonian/numerics.hpp"
#include "apollonian/circle.hpp"
#include "apollonian/mobius.hpp"
#include "apollonian/geometry.hpp"
#include "apollonian/descartes.hpp"
#include "apollonian/ford.hpp"
#include "apollonian/selfsim.hpp"
#include "apollonian/kaleido.hpp"
#include "apollonian/pythagoras.hpp"
#include "apollonian/gasket.hpp"
#include "apollonian/io.hpp"
#include "apollonian/render.hpp"

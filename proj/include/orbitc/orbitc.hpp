#pragma once

#include "orbitc/weights.hpp"
#include "orbitc/matrix.hpp"
#include "orbitc/random.hpp"
#include "orbitc/coadjoint.hpp"
#include "orbitc/inverse_spectral.hpp"
#include "orbitc/orbit_topology.hpp"
#include "orbitc/rep_side.hpp"
#include "orbitc/fock.hpp"
#include "orbitc/sphere.hpp"

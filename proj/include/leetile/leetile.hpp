#pragma once

// Umbrella header.

#include <leetile/abelian_group.hpp>
#include <leetile/certify.hpp>
#include <leetile/factorize.hpp>
#include <leetile/group_ring.hpp>
#include <leetile/json_io.hpp>
#include <leetile/lee_geometry.hpp>
#include <leetile/profiles.hpp>
#include <leetile/search.hpp>
#include <leetile/smith.hpp>
#include <leetile/tiling.hpp>

#pragma once

#include "skewperm/bootstrap.hpp"
#include "skewperm/config.hpp"
#include "skewperm/groupalg.hpp"
#include "skewperm/linalg.hpp"
#include "skewperm/perm.hpp"
#include "skewperm/rational.hpp"
#include "skewperm/serialize.hpp"
#include "skewperm/skewrep.hpp"
#include "skewperm/solomon.hpp"
#include "skewperm/spectra.hpp"
#include "skewperm/verify.hpp"

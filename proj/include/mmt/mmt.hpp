#pragma once

#include "mmt/charpoly.hpp"
#include "mmt/enumerate.hpp"
#include "mmt/errors.hpp"
#include "mmt/identity.hpp"
#include "mmt/io.hpp"
#include "mmt/numbers.hpp"
#include "mmt/poly.hpp"
#include "mmt/rewrite.hpp"
#include "mmt/words.hpp"

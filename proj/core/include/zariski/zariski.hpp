#pragma once

#include "zariski/algebra.hpp"
#include "zariski/codec.hpp"
#include "zariski/error.hpp"
#include "zariski/finite_group.hpp"
#include "zariski/perm.hpp"
#include "zariski/ragged.hpp"
#include "zariski/random.hpp"
#include "zariski/sepgroup.hpp"
#include "zariski/symtop.hpp"
#include "zariski/witness.hpp"
#include "zariski/words.hpp"

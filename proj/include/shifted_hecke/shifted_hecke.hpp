#pragma once

#include "shifted_hecke/errors.hpp"
#include "shifted_hecke/insertion.hpp"
#include "shifted_hecke/permutation.hpp"
#include "shifted_hecke/series.hpp"
#include "shifted_hecke/tableaux.hpp"
#include "shifted_hecke/words.hpp"

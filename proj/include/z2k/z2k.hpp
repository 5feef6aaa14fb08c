#pragma once

#include "binary_word.hpp"
#include "code_lattice.hpp"
#include "core_algebra.hpp"
#include "errors.hpp"
#include "gray_map.hpp"
#include "perfect.hpp"
#include "permutation.hpp"
#include "propelinear.hpp"
#include "searcher.hpp"

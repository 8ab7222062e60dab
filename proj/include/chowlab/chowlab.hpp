#pragma once

#include "chowlab/subset.hpp"
#include "chowlab/matroid.hpp"
#include "chowlab/complex.hpp"
#include "chowlab/lattice.hpp"
#include "chowlab/fans.hpp"
#include "chowlab/permutation.hpp"
#include "chowlab/parallel.hpp"
#include "chowlab/linalg.hpp"
#include "chowlab/chow.hpp"
#include "chowlab/partition.hpp"
#include "chowlab/codes.hpp"
#include "chowlab/bijections.hpp"
#include "chowlab/symfunc.hpp"
#include "chowlab/io.hpp"
#include "chowlab/verify.hpp"

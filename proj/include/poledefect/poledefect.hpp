#pragma once

#include "poledefect/errors.hpp"
#include "poledefect/exact_rank.hpp"
#include "poledefect/expression.hpp"
#include "poledefect/fixtures.hpp"
#include "poledefect/invariants.hpp"
#include "poledefect/koszul.hpp"
#include "poledefect/modular_rank.hpp"
#include "poledefect/monomials.hpp"
#include "poledefect/polynomial.hpp"
#include "poledefect/rank.hpp"
#include "poledefect/series.hpp"
#include "poledefect/sparse_matrix.hpp"
#include "poledefect/term_list.hpp"

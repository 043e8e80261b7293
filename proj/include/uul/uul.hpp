#pragma once

#include "uul/error.hpp"
#include "uul/group.hpp"
#include "uul/subgroup.hpp"
#include "uul/product.hpp"
#include "uul/isomorphism.hpp"
#include "uul/shape.hpp"
#include "uul/decompose.hpp"
#include "uul/algebra.hpp"
#include "uul/units.hpp"
#include "uul/bicyclic.hpp"
#include "uul/builders.hpp"
#include "uul/classify.hpp"
#include "uul/catalog.hpp"
#include "uul/claims.hpp"
#include "uul/report.hpp"
#include "uul/parallel.hpp"

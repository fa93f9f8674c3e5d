#pragma once

#include <hyperoct/errors.hpp>
#include <hyperoct/rational.hpp>
#include <hyperoct/cyclotomic.hpp>
#include <hyperoct/combinatorics.hpp>
#include <hyperoct/signed_permutation.hpp>
#include <hyperoct/group.hpp>
#include <hyperoct/centralizer.hpp>
#include <hyperoct/algebra_element.hpp>
#include <hyperoct/linear_algebra.hpp>
#include <hyperoct/mantaci_reutenauer.hpp>
#include <hyperoct/idempotents.hpp>
#include <hyperoct/class_function.hpp>
#include <hyperoct/characters.hpp>
#include <hyperoct/parallel.hpp>
#include <hyperoct/serialize.hpp>
#include <hyperoct/verify.hpp>

#pragma once

#include "config_file.hpp"
#include "configs.hpp"
#include "criteria.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "ideal.hpp"
#include "monomial.hpp"
#include "poly_io.hpp"
#include "polynomial.hpp"
#include "random.hpp"

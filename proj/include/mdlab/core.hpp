#pragma once

// Exact sparse polynomial arithmetic over Q, multigradings and term orders.

#include "grading.hpp"
#include "io.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "term_order.hpp"
#include "variable.hpp"
